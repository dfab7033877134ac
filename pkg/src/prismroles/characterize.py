"""Polynomial-time decision: does the complementary prism of G admit a
3-role assignment?

The prism has one unless G or its complement falls into one of five
families, all recognisable from component and degree scans:

1. a complete graph on at least two vertices;
2. a graph with isolated vertices whose other components are all complete
   bipartite, except K_1 + K_{1,m};
3. a perfect matching with at least four edges;
4. a union of at least three stars, one with at least two leaves;
5. a union of exactly two stars, each with at least two leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import (ComponentDecomposition, Graph, complement, components,
                    is_complete, is_complete_bipartite_component, is_star_component)

SIDES = ("G", "Gc")


@dataclass(frozen=True)
class Match:
    side: str  # "G" or "Gc"
    condition: int
    evidence: str


@dataclass(frozen=True)
class DecisionReport:
    has_assignment: bool
    matched: Match | None = None

    def __post_init__(self) -> None:
        if self.has_assignment == (self.matched is not None):
            raise ValueError("a NO verdict needs a matched condition and a YES verdict none")

    @property
    def verdict(self) -> str:
        return "has-assignment" if self.has_assignment else "no-assignment"

    def line(self) -> str:
        if self.matched is None:
            return "YES"
        return f"NO side={self.matched.side} cond={self.matched.condition}"

    def as_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.matched is not None:
            out.update(side=self.matched.side, condition=self.matched.condition,
                       evidence=self.matched.evidence)
        return out


def _summary(comps: ComponentDecomposition) -> str:
    parts = []
    for c in comps:
        if c.order == 1:
            parts.append("K1")
        elif (ab := is_complete_bipartite_component(c)) is not None:
            parts.append(f"K{{{ab[0]},{ab[1]}}}")
        else:
            parts.append(f"[{c.order}v,{c.edge_count}e]")
    return " + ".join(parts)


def cond1_complete(g: Graph, comps: ComponentDecomposition | None = None) -> bool:
    return g.n >= 2 and is_complete(g)


def cond2_isolated_union_complete_bipartite(g: Graph,
                                            comps: ComponentDecomposition | None = None) -> bool:
    comps = comps or components(g)
    isolated = sum(1 for c in comps if c.order == 1)
    if isolated == 0:
        return False
    nontrivial = comps.nontrivial
    if any(is_complete_bipartite_component(c) is None for c in nontrivial):
        return False
    # K_1 + K_{1,m} is the one exception
    if isolated == 1 and len(nontrivial) == 1 and is_star_component(nontrivial[0]) is not None:
        return False
    return True


def _star_sizes(comps: ComponentDecomposition) -> list[int] | None:
    sizes = []
    for c in comps:
        m = is_star_component(c)
        if m is None:
            return None
        sizes.append(m)
    return sorted(sizes, reverse=True)


def cond3_matching(g: Graph, comps: ComponentDecomposition | None = None) -> bool:
    comps = comps or components(g)
    sizes = _star_sizes(comps)
    return sizes is not None and len(sizes) >= 4 and sizes[0] == 1


def cond4_many_stars(g: Graph, comps: ComponentDecomposition | None = None) -> bool:
    comps = comps or components(g)
    sizes = _star_sizes(comps)
    return sizes is not None and len(sizes) >= 3 and sizes[0] >= 2


def cond5_two_stars(g: Graph, comps: ComponentDecomposition | None = None) -> bool:
    comps = comps or components(g)
    sizes = _star_sizes(comps)
    return sizes is not None and len(sizes) == 2 and sizes[1] >= 2


CONDITIONS: tuple[Callable[..., bool], ...] = (
    cond1_complete,
    cond2_isolated_union_complete_bipartite,
    cond3_matching,
    cond4_many_stars,
    cond5_two_stars,
)


def matched_condition(g: Graph, comps: ComponentDecomposition | None = None) -> int | None:
    """First of conditions 1..5 that ``g`` itself satisfies, if any."""
    comps = comps or components(g)
    for k, cond in enumerate(CONDITIONS, start=1):
        if cond(g, comps):
            return k
    return None


def decide(g: Graph) -> DecisionReport:
    """Scan G for conditions 1..5, then the complement; O(n^2) overall."""
    if g.n < 1:
        raise ValueError("decide needs a graph with at least one vertex")
    if g.n == 1:
        # the prism is K_2: too few vertices for three roles
        return DecisionReport(False, Match("G", 2, "K1 (prism has 2 vertices)"))
    comps = components(g)
    k = matched_condition(g, comps)
    if k is not None:
        return DecisionReport(False, Match("G", k, _summary(comps)))
    gc = complement(g)
    comps_c = components(gc)
    k = matched_condition(gc, comps_c)
    if k is not None:
        return DecisionReport(False, Match("Gc", k, _summary(comps_c)))
    return DecisionReport(True)


def has_assignment(g: Graph) -> bool:
    return decide(g).has_assignment
