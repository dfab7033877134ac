"""Finite simple undirected graphs over dense integer vertices.

Adjacency is stored as one Python ``int`` bitmask per vertex, so the
complement and most structural scans run in word-parallel time even for
a few thousand vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  The plain
    constructor trusts its input; use :meth:`from_rows` or
    :meth:`from_edges` for anything coming from outside.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from raw bitmask rows, checking range and symmetry."""
        n = len(rows)
        g = cls(n, tuple(rows))
        full = g.full_mask
        for v, row in enumerate(g.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            for u in iter_bits(row):
                if not g.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries ---------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a mask."""
        return self.adj[v] | (1 << v)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``k`` is this graph's vertex ``order[k]``."""
        pos = [0] * self.n
        for k, v in enumerate(order):
            pos[v] = k
        rows = [0] * self.n
        for k, v in enumerate(order):
            rows[k] = sum(1 << pos[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << idx[u] for u in iter_bits(self.adj[v]) if u in idx))
        return Graph(len(vertices), tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = tuple(row << self.n for row in other.adj)
        return Graph(self.n + other.n, self.adj + shifted)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- standard families ---------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(m: int) -> Graph:
    return complete_bipartite(1, m)


def union(*graphs: Graph) -> Graph:
    out = Graph.empty(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


def matching(t: int) -> Graph:
    return union(*[complete(2)] * t)


# -- graph-core operations -----------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    mask: int
    edge_count: int
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Component, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    @property
    def nontrivial(self) -> list[Component]:
        return [c for c in self.components if c.order >= 2]

    @property
    def is_bipartite(self) -> bool:
        return all(c.is_bipartite for c in self.components)


def components(g: Graph) -> ComponentDecomposition:
    """Connected components, each with a 2-colouring when one exists.

    Breadth-first search layer by layer on bitmasks; a component is
    bipartite iff no edge lies inside a BFS layer.
    """
    adj = g.adj
    unseen = g.full_mask
    out = []
    while unseen:
        root = (unseen & -unseen).bit_length() - 1
        layer = 1 << root
        seen = layer
        sides = [0, 0]
        parity = 0
        bipartite = True
        degree_sum = 0
        while layer:
            sides[parity] |= layer
            reach = 0
            for v in iter_bits(layer):
                row = adj[v]
                reach |= row
                degree_sum += row.bit_count()
                if bipartite and row & layer:
                    bipartite = False
            layer = reach & ~seen
            seen |= layer
            parity ^= 1
        unseen &= ~seen
        part = None
        if bipartite:
            part = (tuple(iter_bits(sides[0])), tuple(iter_bits(sides[1])))
        out.append(Component(tuple(iter_bits(seen)), seen, degree_sum // 2, part))
    return ComponentDecomposition(tuple(out))


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    return components(g).is_bipartite


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    isolated: frozenset[int]
    leaves: frozenset[int]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(g.degrees())
    return DegreeProfile(
        degs,
        frozenset(v for v, d in enumerate(degs) if d == 0),
        frozenset(v for v, d in enumerate(degs) if d == 1),
    )


def is_complete(g: Graph) -> bool:
    # vacuously true for n <= 1
    return all(d == g.n - 1 for d in g.degrees())


def is_complete_bipartite_component(c: Component) -> tuple[int, int] | None:
    """Part sizes ``(|A|, |B|)`` with ``|A| <= |B|`` if ``c`` is some K_{a,b}."""
    if c.bipartition is None or c.order < 2:
        return None
    a, b = (len(p) for p in c.bipartition)
    if c.edge_count != a * b:
        return None
    return (min(a, b), max(a, b))


def is_star_component(c: Component) -> int | None:
    """Number of leaves if ``c`` is a star K_{1,m} (K_2 counts, m = 1)."""
    sizes = is_complete_bipartite_component(c)
    if sizes is None or sizes[0] != 1:
        return None
    return sizes[1]


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


def triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for u in range(g.n):
        for v in iter_bits(g.adj[u] >> (u + 1) << (u + 1)):
            for w in iter_bits(g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)):
                yield u, v, w


# -- isomorphism (desk-scale checks) -------------------------------------

def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Backtracking search for ``phi`` with ``uv in E(g) <=> phi(u)phi(v) in E(h)``.

    Returns ``phi`` as a list or ``None``.  Exponential in the worst case;
    meant for small graphs.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    gdeg, hdeg = g.degrees(), h.degrees()
    order = sorted(range(n), key=lambda v: -gdeg[v])
    phi = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
        phi[v] = -1
        return False

    return phi if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by trying every permutation; only for tiny graphs."""
    if g.n != h.n:
        return False
    target = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()) \
                and g.edge_count() == len(target):
            return True
    return False


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
