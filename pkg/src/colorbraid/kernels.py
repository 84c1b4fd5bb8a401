"""Dispatch to the compiled kernels when they were built, else the Python ones.

Set ``COLORBRAID_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("COLORBRAID_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"


def artin_images(n, letters):
    return _impl.artin_images(n, letters)


def apply_codes(codes, letters, conj):
    return _impl.apply_codes(codes, letters, conj)


def census_labels(n, d, pairs, conj):
    return _impl.census_labels(n, d, pairs, conj)
