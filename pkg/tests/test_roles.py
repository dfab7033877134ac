import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs, random_graph
from prismroles.census import graphs_up_to
from prismroles.graph import Graph, complete, cycle, is_bipartite, is_connected, matching
from prismroles.prism import complementary_prism
from prismroles.roles import (Assignment, AssignmentError, RoleGraph, brute_force_solve,
                              canonical_role_labeling, enumerate_role_graphs,
                              format_assignment, named_role_graph, parse_assignment, path3,
                              quotient, role_graph_alias, solve_for, triangle3, verify)


def naive_classes(r, connected):
    # every symmetric 0/1 matrix with loops, keyed by its least permuted form
    slots = [(i, j) for i in range(r) for j in range(i, r)]
    classes = set()
    for bits in product((0, 1), repeat=len(slots)):
        m = [[0] * r for _ in range(r)]
        for (i, j), b in zip(slots, bits):
            m[i][j] = m[j][i] = b
        if connected:
            seen, stack = {0}, [0]
            while stack:
                i = stack.pop()
                for j in range(r):
                    if m[i][j] and j not in seen:
                        seen.add(j)
                        stack.append(j)
            if len(seen) != r:
                continue
        classes.add(min(tuple(tuple(m[p[i]][p[j]] for j in range(r)) for i in range(r))
                        for p in permutations(range(r))))
    return len(classes)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_catalogue_counts_match_naive_enumeration(r):
    assert len(enumerate_role_graphs(r)) == naive_classes(r, True)
    assert len(enumerate_role_graphs(r, connected=False)) == naive_classes(r, False)


def test_catalogue_frozen_counts():
    assert [len(enumerate_role_graphs(r)) for r in (1, 2, 3)] == [2, 3, 10]
    assert [len(enumerate_role_graphs(r, connected=False)) for r in (1, 2, 3)] == [2, 6, 20]


def test_three_role_catalogue_is_normalized():
    for rg in enumerate_role_graphs(3):
        assert {1, 3} <= rg.neighbors(2)


def test_canonical_labeling_prefers_normalization():
    rg = RoleGraph.from_edges(3, [(2, 1), (1, 3)])  # centre is role 1
    canon, perm = canonical_role_labeling(rg)
    assert canon == path3()
    assert rg.permuted(perm) == canon


def test_aliases():
    assert role_graph_alias(path3([1])) == "R_{3,2}"   # loop at an end, either end
    assert role_graph_alias(triangle3()) == "R_{3,7}"
    assert named_role_graph("R_{3,4}") == path3([2, 3])
    assert role_graph_alias(triangle3([1, 2, 3])) is None


def test_quotient_examples():
    assert quotient(complete(2), Assignment((1, 1), 1)) == RoleGraph.from_edges(1, [(1, 1)])
    g = cycle(6)
    ident = Assignment(tuple(range(1, 7)), 6)
    assert quotient(g, ident).adj == g.adj
    with pytest.raises(AssignmentError):
        quotient(g, Assignment((1,) * 6, 3))
    with pytest.raises(AssignmentError):
        quotient(g, Assignment((1, 2, 3), 3))


C5_LABELLING = (1, 2, 3, 3, 2, 2, 3, 3, 3, 3)


def test_petersen_witness():
    h = complementary_prism(cycle(5)).graph
    a = Assignment(C5_LABELLING, 3)
    rg = quotient(h, a)
    assert rg == path3([3])
    assert verify(h, a, rg)
    bad = verify(h, Assignment((1,) * 10, 3), rg)
    assert not bad and "surjective" in bad.reason


def test_verify_reports_vertex():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    v = verify(g, Assignment((1, 2, 2), 2), RoleGraph.from_edges(2, [(1, 2)]))
    assert not v and v.vertex is not None


def naive_solve(g, r=3):
    """Every labelling, checked from the definition."""
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for roles in product(range(1, r + 1), repeat=g.n):
        if len(set(roles)) != r:
            continue
        want = {}
        ok = True
        for v in range(g.n):
            seen = frozenset(roles[u] for u in nbrs[v])
            if want.setdefault(roles[v], seen) != seen:
                ok = False
                break
        if ok:
            return roles
    return None


def test_solver_matches_naive_search_on_small_prisms():
    for g in graphs_up_to(5):
        h = complementary_prism(g).graph
        res = brute_force_solve(h)
        assert res.status in ("found", "none")
        assert res.found == (naive_solve(h) is not None), g


def test_solver_matches_naive_search_on_random_graphs():
    rng = random.Random(17)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        res = brute_force_solve(g)
        assert res.found == (naive_solve(g) is not None), g
        if res.found:
            assert verify(g, res.assignment, res.role_graph)


def test_solver_known_cases():
    assert brute_force_solve(complementary_prism(complete(3)).graph).status == "none"
    res = brute_force_solve(complementary_prism(cycle(5)).graph)
    assert res.found and res.role_graph.is_connected()
    assert brute_force_solve(complementary_prism(matching(4)).graph).status == "none"
    for n in range(3):
        assert brute_force_solve(Graph.empty(n)).status == "none"
        assert brute_force_solve(complete(n)).status == "none"


def test_budget_exhaustion_is_distinct():
    res = brute_force_solve(complementary_prism(matching(4)).graph, budget=50)
    assert res.status == "unknown"
    assert solve_for(complementary_prism(matching(4)).graph, triangle3(), budget=10).status == "unknown"


def test_solver_deterministic():
    h = complementary_prism(Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])).graph
    assert brute_force_solve(h) == brute_force_solve(h)


def test_bipartite_role_graph_implies_bipartite_graph():
    for g in graphs_up_to(6):
        for target in (g, complementary_prism(g).graph):
            res = brute_force_solve(target)
            if res.found:
                if res.role_graph.is_bipartite():
                    assert is_bipartite(target)
                if is_connected(target):
                    assert res.role_graph.is_connected()


@st.composite
def graph_and_assignment(draw):
    g = draw(graphs(min_n=1, max_n=10))
    r = draw(st.integers(1, g.n))
    roles = draw(st.lists(st.integers(1, r), min_size=g.n, max_size=g.n))
    roles[:r] = list(range(1, r + 1))  # surjective
    return g, Assignment(tuple(roles), r)


@settings(max_examples=300)
@given(graph_and_assignment())
def test_verify_quotient_consistency(pair):
    g, a = pair
    rg = quotient(g, a)
    direct = all({a.roles[u] for u in g.neighbors(v)} == rg.neighbors(a.roles[v])
                 for v in range(g.n))
    assert bool(verify(g, a, rg)) == direct
    if is_connected(g) and direct:
        assert rg.is_connected()


@settings(max_examples=100)
@given(graph_and_assignment())
def test_assignment_format_round_trip(pair):
    g, a = pair
    rg = quotient(g, a)
    text = format_assignment(a, rg)
    assert parse_assignment(text) == (a, rg)
    assert format_assignment(*parse_assignment(text)) == text


def test_parse_assignment_errors():
    with pytest.raises(AssignmentError):
        parse_assignment("vertices 1\n0 1\n")
    with pytest.raises(AssignmentError):
        parse_assignment("roles 1\n1 1\nvertices 2\n0 1\n")
    with pytest.raises(AssignmentError):
        parse_assignment("roles 1\nvertices 1\n0 2\n")
