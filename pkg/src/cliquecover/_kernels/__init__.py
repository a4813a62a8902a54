"""Kernel backend selection.

The hot kernels exist twice: a Cython extension (``_ckern``) and a pure
Python fallback (``pure``).  The compiled backend is used when it imports
successfully; ``CLIQUECOVER_BACKEND=pure|compiled|auto`` overrides the
choice at process start, and :func:`use` forces a backend temporarily
(benchmarks, parity tests).  Both backends produce identical outputs.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import pure as _pure

try:
    from . import _ckern as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None


def _resolve(name: str):
    if name == "pure":
        return _pure
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernel extension is not available")
        return _compiled
    if name == "auto":
        return _compiled if _compiled is not None else _pure
    raise ValueError(f"unknown kernel backend {name!r}")


_active = _resolve(os.environ.get("CLIQUECOVER_BACKEND", "auto"))


def active_backend() -> str:
    return "compiled" if _active is _compiled else "pure"


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _compiled is not None else ("pure",)


@contextmanager
def use(name: str):
    """Temporarily force a backend (not thread-safe; test/bench use only)."""
    global _active
    prev = _active
    _active = _resolve(name)
    try:
        yield
    finally:
        _active = prev


def max_matching(n, indptr, indices):
    return _active.max_matching(n, indptr, indices)


def reduce_trace(n, indptr, indices):
    return _active.reduce_trace(n, indptr, indices)


def find_triangle(n, indptr, indices):
    return _active.find_triangle(n, indptr, indices)


def find_c4(n, indptr, indices):
    return _active.find_c4(n, indptr, indices)


def find_bull(n, indptr, indices):
    return _active.find_bull(n, indptr, indices)
