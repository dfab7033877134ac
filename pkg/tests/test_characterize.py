import random
import time

import pytest
from hypothesis import given

from conftest import graphs, random_graph
from prismroles.census import graphs_up_to
from prismroles.characterize import (DecisionReport, Match, cond1_complete,
                                     cond2_isolated_union_complete_bipartite, cond3_matching,
                                     cond4_many_stars, cond5_two_stars, decide, has_assignment)
from prismroles.graph import (Graph, complement, complete, complete_bipartite, components, cycle,
                              is_bipartite, matching, path, star, union)
from prismroles.prism import complementary_prism
from prismroles.roles import brute_force_solve

K1 = Graph.empty(1)


def test_cond1():
    assert cond1_complete(complete(5))
    assert not cond1_complete(K1)
    assert not cond1_complete(path(3))


def test_cond2():
    assert cond2_isolated_union_complete_bipartite(union(K1, complete_bipartite(2, 3)))
    assert not cond2_isolated_union_complete_bipartite(union(K1, star(4)))
    assert cond2_isolated_union_complete_bipartite(K1)
    assert cond2_isolated_union_complete_bipartite(union(K1, K1, star(4)))
    assert not cond2_isolated_union_complete_bipartite(union(K1, path(4)))


def test_cond3():
    assert cond3_matching(matching(4))
    assert not cond3_matching(matching(3))
    g = union(matching(4), K1)
    assert not cond3_matching(g)
    assert cond2_isolated_union_complete_bipartite(g)


def test_cond4_cond5():
    g = union(star(2), complete(2), complete(2))
    assert cond4_many_stars(g) and not cond5_two_stars(g)
    g = union(star(2), star(3))
    assert cond5_two_stars(g) and not cond4_many_stars(g)
    g = union(complete(2), star(3))
    assert not cond4_many_stars(g) and not cond5_two_stars(g)


def test_decide_examples():
    assert decide(cycle(5)) == DecisionReport(True)
    r = decide(complete(3))
    assert (r.matched.side, r.matched.condition) == ("G", 1)
    assert r.line() == "NO side=G cond=1"
    r = decide(complement(matching(4)))
    assert (r.matched.side, r.matched.condition) == ("Gc", 3)
    assert decide(K1).line() == "NO side=G cond=2"
    with pytest.raises(ValueError):
        decide(Graph.empty(0))


def test_report_invariant():
    with pytest.raises(ValueError):
        DecisionReport(True, Match("G", 1, ""))
    with pytest.raises(ValueError):
        DecisionReport(False)


def test_json_record():
    d = decide(union(star(2), star(3))).as_dict()
    assert d == {"verdict": "no-assignment", "side": "G", "condition": 5,
                 "evidence": "K{1,2} + K{1,3}"}


def test_symmetric_under_complement():
    for g in graphs_up_to(7):
        assert has_assignment(g) == has_assignment(complement(g))


def test_matches_oracle_through_order_seven():
    for g in graphs_up_to(7):
        res = brute_force_solve(complementary_prism(g).graph)
        assert res.status != "unknown"
        assert res.found == has_assignment(g), g


def test_no_instances_are_disconnected_bipartite_on_some_side():
    for g in graphs_up_to(7):
        r = decide(g)
        if r.has_assignment:
            continue
        side = g if r.matched.side == "G" else complement(g)
        if r.matched.condition == 1:
            side = complement(side)
        assert is_bipartite(side) and len(components(side)) >= 2 or side.n == 1


@given(graphs(min_n=1, max_n=14))
def test_verdict_equals_condition_scan(g):
    conds = (cond1_complete, cond2_isolated_union_complete_bipartite, cond3_matching,
             cond4_many_stars, cond5_two_stars)
    hit = any(c(h) for h in (g, complement(g)) for c in conds) or g.n == 1
    assert has_assignment(g) == (not hit)


def test_large_graph_is_quick():
    g = random_graph(random.Random(0), 1000, 0.5)
    t = time.perf_counter()
    decide(g)
    assert time.perf_counter() - t < 5
