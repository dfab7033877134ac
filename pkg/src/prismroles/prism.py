from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement


@dataclass(frozen=True)
class PrismGraph:
    """Complementary prism of ``base``.

    Vertices ``0..n-1`` are the originals, ``n + i`` is the mirror of
    original ``i``; the mirrors induce the complement of ``base``.
    """

    base: Graph
    graph: Graph

    @property
    def n(self) -> int:
        return self.base.n

    def mirror(self, v: int) -> int:
        return v + self.n if v < self.n else v - self.n

    def is_original(self, v: int) -> bool:
        return v < self.n

    def origin(self, v: int) -> tuple[str, int]:
        return ("original", v) if v < self.n else ("mirrored", v - self.n)


def complementary_prism(g: Graph) -> PrismGraph:
    n = g.n
    if n < 1:
        raise ValueError("complementary prism needs at least one vertex")
    comp = complement(g)
    rows = [g.adj[i] | (1 << (n + i)) for i in range(n)]
    rows += [(comp.adj[i] << n) | (1 << i) for i in range(n)]
    return PrismGraph(g, Graph(2 * n, tuple(rows)))


def swap_halves(n: int) -> list[int]:
    """Vertex map prism(G) -> prism(complement G) exchanging the halves."""
    return [i + n for i in range(n)] + list(range(n))


def origin_comments(p: PrismGraph) -> list[str]:
    return [f"complementary prism of a {p.n}-vertex graph; original i <-> mirrored n+i"] + [
        f"{i} <-> {i + p.n}" for i in range(p.n)
    ]
