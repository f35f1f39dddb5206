"""Pure-Python / numpy kernels, used when the compiled extension is absent.

The arithmetic mirrors ``_scan_cy.pyx`` so both backends agree to the last
bit on the p = 2 path (identical prefix sums, identical per-window ops).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def kahan_prefix(values):
    """Compensated (Kahan) prefix sums; out[k] = sum of values[:k]."""
    x = np.ascontiguousarray(values, dtype=np.float64)
    out = np.empty(x.shape[0] + 1, dtype=np.float64)
    out[0] = 0.0
    s = 0.0
    c = 0.0
    for i, v in enumerate(x.tolist()):
        y = v - c
        t = s + y
        c = (t - s) - y
        s = t
        out[i + 1] = s
    return out


def kahan_total(values) -> float:
    """Compensated sum of a 1-D array."""
    s = 0.0
    c = 0.0
    for v in np.ascontiguousarray(values, dtype=np.float64).tolist():
        y = v - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


def window_ratio_scan(prefix_a, prefix_b, pm1: float, cap: int):
    """Scan all index windows of length <= cap.

    prefix_a, prefix_b are prefix-sum arrays of length L+1.  For the window
    [i, j] (inclusive, ell = j-i+1) the scanned quantity is

        (A_ij) * (B_ij)**pm1 / ell**(pm1+1)

    where A_ij, B_ij are the window sums.  Returns (max_value, i, j).
    Vectorized over the start index for each window length.
    """
    pa = np.asarray(prefix_a, dtype=np.float64)
    pb = np.asarray(prefix_b, dtype=np.float64)
    length = pa.shape[0] - 1
    best = -np.inf
    bi = 0
    bj = 0
    for ell in range(1, min(cap, length) + 1):
        sa = pa[ell:] - pa[:-ell]
        sb = pb[ell:] - pb[:-ell]
        if pm1 == 1.0:
            r = sa * sb / float(ell * ell)
        else:
            r = sa * sb**pm1 / float(ell) ** (pm1 + 1.0)
        k = int(np.argmax(r))
        if r[k] > best:
            best = float(r[k])
            bi = k
            bj = k + ell - 1
    return best, bi, bj
