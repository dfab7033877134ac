"""Kernel selection: compiled extension when importable, else pure Python.

Set ``PRISMROLES_PURE_PYTHON=1`` to force the fallback.  The compiled
kernels handle graphs of up to 64 vertices; larger inputs always go to
the Python versions.
"""

from __future__ import annotations

import os

from . import _kernels_py

FOUND = _kernels_py.FOUND
NONE = _kernels_py.NONE
EXHAUSTED = _kernels_py.EXHAUSTED

_compiled = None
if not os.environ.get("PRISMROLES_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_MAX_N = 64


def solve_role_graph(adj, order, rg, budget, backend: str | None = None):
    impl = _pick(len(adj), backend)
    if impl is _compiled and len(rg) > 16:
        impl = _kernels_py
    return impl.solve_role_graph(list(adj), list(order), list(rg), int(budget))


def canonical_form(adj, backend: str | None = None):
    return _pick(len(adj), backend).canonical_form(list(adj))


def _pick(n: int, backend: str | None):
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if _compiled is not None and n <= COMPILED_MAX_N:
        return _compiled
    return _kernels_py
