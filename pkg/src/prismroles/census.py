"""Canonical forms and exhaustive enumeration of small graphs."""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .graph import Graph


def canonical_code(g: Graph) -> tuple[int, ...]:
    return kernels.canonical_form(g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    code, _ = kernels.canonical_form(g.adj)
    return Graph(g.n, tuple(code))


def graphs_of_order(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by attaching a new vertex, with every possible neighbourhood, to
    each representative on ``n - 1`` vertices.  Sorted by canonical code.
    """
    return [Graph(n, code) for code in _codes(n)]


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        raise ValueError("negative order")
    if n == 0:
        return ((),)
    seen = set()
    for code in _codes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(code) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    rows[u] |= 1 << (n - 1)
            seen.add(kernels.canonical_form(rows)[0])
    return tuple(sorted(seen))


def graphs_up_to(n_max: int, n_min: int = 1) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(graphs_of_order(n))
    return out
