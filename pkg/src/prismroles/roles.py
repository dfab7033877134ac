"""Role graphs, role assignments, verification and the exhaustive solver.

Roles are numbered ``1..r``.  A :class:`RoleGraph` may have loops; an
:class:`Assignment` maps every vertex of a simple graph to a role.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from . import kernels
from .graph import Graph, is_bipartite, is_connected, iter_bits

DEFAULT_BUDGET = 10**8


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class RoleGraph:
    """Graph on roles ``1..r``; ``adj[i-1]`` has bit ``j-1`` set iff ``i ~ j``."""

    r: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[tuple[int, int]]) -> "RoleGraph":
        rows = [0] * r
        for i, j in edges:
            if not (1 <= i <= r and 1 <= j <= r):
                raise ValueError(f"role edge {i}-{j} out of range 1..{r}")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(r, tuple(rows))

    def neighbors(self, i: int) -> set[int]:
        return {j + 1 for j in iter_bits(self.adj[i - 1])}

    def has_loop(self, i: int) -> bool:
        return bool(self.adj[i - 1] >> (i - 1) & 1)

    def loops(self) -> set[int]:
        return {i for i in range(1, self.r + 1) if self.has_loop(i)}

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.r) for j in iter_bits(self.adj[i]) if j >= i]

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row >> j & 1 for j in range(self.r)) for row in self.adj)

    def is_connected(self) -> bool:
        if self.r == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for i in iter_bits(frontier):
                reach |= self.adj[i]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.r) - 1

    def is_bipartite(self) -> bool:
        """Loop-free and 2-colourable."""
        if self.loops():
            return False
        return is_bipartite(Graph(self.r, self.adj))

    def permuted(self, perm: Sequence[int]) -> "RoleGraph":
        """Relabel role ``i`` as ``perm[i-1]``."""
        return RoleGraph.from_edges(self.r, [(perm[i - 1], perm[j - 1]) for i, j in self.edges()])

    def __str__(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.edges()) or "(no edges)"


@dataclass(frozen=True)
class Assignment:
    """``roles[v]`` is the role (``1..r``) of vertex ``v``."""

    roles: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        for v, x in enumerate(self.roles):
            if not 1 <= x <= self.r:
                raise AssignmentError(f"vertex {v} has role {x} outside 1..{self.r}")

    def is_surjective(self) -> bool:
        return set(self.roles) == set(range(1, self.r + 1))

    def vertices_with(self, role: int) -> list[int]:
        return [v for v, x in enumerate(self.roles) if x == role]

    def relabeled(self, perm: Sequence[int]) -> "Assignment":
        return Assignment(tuple(perm[x - 1] for x in self.roles), self.r)


# -- quotient and verification ------------------------------------------

def quotient(g: Graph, a: Assignment) -> RoleGraph:
    if len(a.roles) != g.n:
        raise AssignmentError(f"assignment covers {len(a.roles)} vertices, graph has {g.n}")
    if not a.is_surjective():
        missing = sorted(set(range(1, a.r + 1)) - set(a.roles))
        raise AssignmentError(f"assignment is not surjective; unused roles {missing}")
    return RoleGraph.from_edges(a.r, [(a.roles[u], a.roles[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    vertex: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def role_sets(g: Graph, a: Assignment) -> list[set[int]]:
    return [{a.roles[u] for u in iter_bits(g.adj[v])} for v in range(g.n)]


def verify(g: Graph, a: Assignment, rg: RoleGraph) -> Verdict:
    """Check ``a`` is an ``rg``-role assignment of ``g``.

    Failure carries a reason and, where it applies, the offending vertex.
    """
    if len(a.roles) != g.n:
        return Verdict(False, f"assignment covers {len(a.roles)} of {g.n} vertices")
    if a.r != rg.r:
        return Verdict(False, f"assignment uses {a.r} roles, role graph has {rg.r}")
    if not a.is_surjective():
        return Verdict(False, "assignment is not surjective")
    for v, seen in enumerate(role_sets(g, a)):
        want = rg.neighbors(a.roles[v])
        if seen != want:
            return Verdict(False, f"vertex {v} (role {a.roles[v]}) sees roles "
                                  f"{sorted(seen)}, role graph requires {sorted(want)}", v)
    if quotient(g, a) != rg:
        return Verdict(False, "role graph differs from the quotient")
    return Verdict(True)


# -- role graph catalogue -----------------------------------------------

def _normalized(rg: RoleGraph) -> bool:
    # every 3-role graph should be drawable with 1 and 3 adjacent to 2
    return rg.r != 3 or {1, 3} <= rg.neighbors(2)


def canonical_role_labeling(rg: RoleGraph) -> tuple[RoleGraph, tuple[int, ...]]:
    """Relabelled copy preferring ``1, 3 in N(2)`` (3 roles), then the
    lexicographically smallest adjacency matrix.  Also returns the
    permutation applied (old role ``i`` becomes ``perm[i-1]``)."""
    best = None
    for perm in permutations(range(1, rg.r + 1)):
        cand = rg.permuted(perm)
        key = (not _normalized(cand), cand.matrix())
        if best is None or key < best[0]:
            best = (key, cand, perm)
    assert best is not None
    return best[1], tuple(best[2])


def enumerate_role_graphs(r: int, connected: bool = True) -> list[RoleGraph]:
    """All role graphs on ``r`` roles up to isomorphism, canonically labelled."""
    return list(_catalogue(r, connected))


@lru_cache(maxsize=None)
def _catalogue(r: int, connected: bool) -> tuple[RoleGraph, ...]:
    if r < 1:
        raise ValueError("need at least one role")
    slots = [(i, j) for i in range(1, r + 1) for j in range(i, r + 1)]
    found = {}
    for bits in range(1 << len(slots)):
        rg = RoleGraph.from_edges(r, [slots[k] for k in range(len(slots)) if bits >> k & 1])
        if connected and not rg.is_connected():
            continue
        canon, _ = canonical_role_labeling(rg)
        found[canon.matrix()] = canon
    return tuple(found[m] for m in sorted(found, key=lambda m: (not _normalized(found[m]), m)))


def path3(loops: Iterable[int] = ()) -> RoleGraph:
    return RoleGraph.from_edges(3, [(1, 2), (2, 3)] + [(i, i) for i in loops])


def triangle3(loops: Iterable[int] = ()) -> RoleGraph:
    return RoleGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)] + [(i, i) for i in loops])


# Display names for the 3-role graphs that the constructions pin down.
# Role graphs are always compared structurally; names are cosmetic.
_ALIASES = {
    "R_{3,1}": path3(),
    "R_{3,2}": path3([3]),
    "R_{3,3}": path3([2]),
    "R_{3,4}": path3([2, 3]),
    "R_{3,5}": path3([1, 3]),
    "R_{3,7}": triangle3(),
}


def role_graph_alias(rg: RoleGraph) -> str | None:
    canon, _ = canonical_role_labeling(rg)
    for name, ref in _ALIASES.items():
        if canonical_role_labeling(ref)[0] == canon:
            return name
    return None


def named_role_graph(name: str) -> RoleGraph:
    return _ALIASES[name]


# -- exhaustive solver ----------------------------------------------------

@dataclass(frozen=True)
class SolveResult:
    status: str  # "found", "none" or "unknown" (budget exhausted)
    assignment: Assignment | None = None
    role_graph: RoleGraph | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def search_order(g: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most placed
    neighbours (ties: higher degree, lower index)."""
    n = g.n
    if n == 0:
        return []
    deg = g.degrees()
    placed = 0
    links = [0] * n
    order = []
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda u: (links[u], deg[u], -u))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
        for u in iter_bits(g.adj[v] & ~placed):
            links[u] += 1
    return order


def solve_for(g: Graph, rg: RoleGraph, budget: int = DEFAULT_BUDGET,
              backend: str | None = None) -> SolveResult:
    """Search for an ``rg``-role assignment of ``g`` specifically."""
    if g.n < rg.r:
        return SolveResult("none")
    status, roles, nodes = kernels.solve_role_graph(g.adj, search_order(g), rg.adj, budget, backend)
    if status == kernels.FOUND:
        a = Assignment(tuple(x + 1 for x in roles), rg.r)
        return SolveResult("found", a, rg, nodes)
    return SolveResult("unknown" if status == kernels.EXHAUSTED else "none", nodes=nodes)


def brute_force_solve(g: Graph, r: int = 3, budget: int = DEFAULT_BUDGET,
                      backend: str | None = None) -> SolveResult:
    """Exhaustive search for any ``r``-role assignment of ``g``.

    Tries each candidate role graph in catalogue order; ``budget`` bounds
    the total number of decision points.  Returned witnesses are checked
    with :func:`verify` before being handed back.
    """
    if r < 1:
        raise ValueError("need at least one role")
    if g.n < r:
        return SolveResult("none")
    candidates = enumerate_role_graphs(r, connected=is_connected(g))
    spent = 0
    exhausted = False
    for rg in candidates:
        res = solve_for(g, rg, budget - spent, backend)
        spent += res.nodes
        if res.found:
            assert res.assignment is not None
            check = verify(g, res.assignment, rg)
            if not check:
                raise AssertionError(f"solver produced an invalid assignment: {check.reason}")
            return SolveResult("found", res.assignment, rg, spent)
        if res.status == "unknown":
            exhausted = True
            break
    return SolveResult("unknown" if exhausted else "none", nodes=spent)


# -- serialisation ----------------------------------------------------------

def format_assignment(a: Assignment, rg: RoleGraph) -> str:
    lines = [f"roles {rg.r}"]
    lines += [f"{i} {j}" for i, j in rg.edges()]
    lines.append(f"vertices {len(a.roles)}")
    lines += [f"{v} {x}" for v, x in enumerate(a.roles)]
    return "\n".join(lines) + "\n"


def parse_assignment(text: str) -> tuple[Assignment, RoleGraph]:
    """Inverse of :func:`format_assignment`; other leading lines are ignored."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    try:
        start = next(k for k, ln in enumerate(lines) if ln.split()[0] == "roles")
    except StopIteration:
        raise AssignmentError("missing 'roles r' header") from None
    r = _ints(lines[start], 1, "roles")[0]
    k = start + 1
    edges = []
    while k < len(lines) and not lines[k].startswith("vertices"):
        edges.append(tuple(_ints(lines[k], 2)))
        k += 1
    if k == len(lines):
        raise AssignmentError("missing 'vertices n' header")
    n = _ints(lines[k], 1, "vertices")[0]
    body = lines[k + 1:]
    if len(body) != n:
        raise AssignmentError(f"expected {n} vertex lines, found {len(body)}")
    roles = [0] * n
    for ln in body:
        v, x = _ints(ln, 2)
        if not 0 <= v < n:
            raise AssignmentError(f"vertex {v} out of range")
        roles[v] = x
    return Assignment(tuple(roles), r), RoleGraph.from_edges(r, edges)


def _ints(line: str, count: int, keyword: str | None = None) -> list[int]:
    parts = line.split()
    if keyword is not None:
        if parts[0] != keyword:
            raise AssignmentError(f"expected '{keyword}' line, got {line!r}")
        parts = parts[1:]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise AssignmentError(f"non-integer token in {line!r}") from None
    if len(vals) != count:
        raise AssignmentError(f"malformed line {line!r}")
    return vals
