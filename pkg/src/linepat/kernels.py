"""Selects the compiled kernel when it is importable and the input fits its bounds.

Set ``LINEPAT_PURE_PYTHON=1`` to force the fallback everywhere.
"""

from __future__ import annotations

import os

from . import _pykernel
from ._pykernel import WalkError

try:
    from . import _ckernel
except ImportError:  # not compiled
    _ckernel = None

BACKEND = "cython" if _ckernel is not None and not os.environ.get("LINEPAT_PURE_PYTHON") else "python"

__all__ = ["BACKEND", "WalkError", "make_walker", "line_orders"]


def _fits(values, limit: int) -> bool:
    return all(-limit <= v <= limit for v in values)


def make_walker(xs, ys, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython" and _ckernel is not None:
        if _fits(xs, _ckernel.WALK_LIMIT) and _fits(ys, _ckernel.WALK_LIMIT):
            return _ckernel.Walker(xs, ys)
    return _pykernel.Walker(xs, ys)


def line_orders(coeffs, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython" and _ckernel is not None:
        if _fits((v for abc in coeffs for v in abc), _ckernel.LINE_LIMIT):
            return _ckernel.line_orders(coeffs)
    return _pykernel.line_orders(coeffs)
