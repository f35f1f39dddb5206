# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the windowed weight-ratio scan.

Same arithmetic as the numpy fallback in _scan_py.py; the p = 2 path uses
plain multiply/divide so the two backends return bit-identical values.
"""

import numpy as np

from libc.math cimport pow as cpow

BACKEND = "cython"


def kahan_prefix(values):
    """Compensated (Kahan) prefix sums; out[k] = sum of values[:k]."""
    cdef const double[::1] x = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    out = np.empty(n + 1, dtype=np.float64)
    cdef double[::1] o = out
    cdef double s = 0.0, c = 0.0, y, t
    cdef Py_ssize_t i
    o[0] = 0.0
    for i in range(n):
        y = x[i] - c
        t = s + y
        c = (t - s) - y
        s = t
        o[i + 1] = s
    return out


def kahan_total(values):
    """Compensated sum of a 1-D array."""
    cdef const double[::1] x = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef double s = 0.0, c = 0.0, y, t
    cdef Py_ssize_t i
    for i in range(n):
        y = x[i] - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


def window_ratio_scan(prefix_a, prefix_b, double pm1, Py_ssize_t cap):
    """Scan all index windows of length <= cap; see _scan_py for the contract."""
    cdef const double[::1] pa = np.ascontiguousarray(prefix_a, dtype=np.float64)
    cdef const double[::1] pb = np.ascontiguousarray(prefix_b, dtype=np.float64)
    cdef Py_ssize_t length = pa.shape[0] - 1
    cdef Py_ssize_t i, j, jmax, bi = 0, bj = 0
    cdef double sa, sb, r, ell
    cdef double best = -np.inf
    if cap > length:
        cap = length
    if pm1 == 1.0:
        for i in range(length):
            jmax = i + cap
            if jmax > length:
                jmax = length
            for j in range(i + 1, jmax + 1):
                sa = pa[j] - pa[i]
                sb = pb[j] - pb[i]
                ell = <double> (j - i)
                r = sa * sb / (ell * ell)
                if r > best:
                    best = r
                    bi = i
                    bj = j - 1
    else:
        for i in range(length):
            jmax = i + cap
            if jmax > length:
                jmax = length
            for j in range(i + 1, jmax + 1):
                sa = pa[j] - pa[i]
                sb = pb[j] - pb[i]
                ell = <double> (j - i)
                r = sa * cpow(sb, pm1) / cpow(ell, pm1 + 1.0)
                if r > best:
                    best = r
                    bi = i
                    bj = j - 1
    return best, bi, bj
