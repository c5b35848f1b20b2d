"""Kernel backend selection: compiled Cython module if built, else pure Python.

The two backends implement the same functions (mul_trunc, div_trunc,
inv_trunc, subst_series, subst_series_many) with identical exact-arithmetic
semantics; tests run both, the benchmark in benchmarks/ compares them.
"""

from . import _pure

try:
    from . import _speedups as _active
except ImportError:
    _active = _pure

BACKEND = _active.BACKEND

mul_trunc = _active.mul_trunc
div_trunc = _active.div_trunc
inv_trunc = _active.inv_trunc
subst_series = _active.subst_series
subst_series_many = _active.subst_series_many


def available_backends():
    """Names of the importable kernel backends."""
    names = ["python"]
    if _active is not _pure:
        names.append(_active.BACKEND)
    return names


def get_backend(name):
    """Return the backend module for a name from available_backends()."""
    if name == "python":
        return _pure
    if _active is not _pure and name == _active.BACKEND:
        return _active
    raise ValueError(f"unknown or unavailable backend: {name!r}")
