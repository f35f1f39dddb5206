"""Kernel backend selection.

Imports the compiled scan kernels when the extension was built, otherwise
falls back to the numpy implementation.  Both expose the same three
functions with identical semantics.
"""

from __future__ import annotations

try:
    from pwcis import _scan_cy as _impl
except ImportError:
    from pwcis import _scan_py as _impl

BACKEND: str = _impl.BACKEND

kahan_prefix = _impl.kahan_prefix
kahan_total = _impl.kahan_total
window_ratio_scan = _impl.window_ratio_scan


def available_backends():
    """Names of importable backends, compiled one first if present."""
    names = []
    try:
        from pwcis import _scan_cy  # noqa: F401

        names.append("cython")
    except ImportError:
        pass
    names.append("python")
    return names


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "cython":
        from pwcis import _scan_cy

        return _scan_cy
    if name == "python":
        from pwcis import _scan_py

        return _scan_py
    raise ValueError(f"unknown backend {name!r}")
