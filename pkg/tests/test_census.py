from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from prismroles.census import canonical_code, canonical_graph, graphs_of_order, graphs_up_to
from prismroles.graph import Graph, is_isomorphic


def brute_code(g):
    # least relabelled row tuple over all n! orders
    best = None
    for p in permutations(range(g.n)):
        code = g.relabel(p).adj
        if best is None or code < best:
            best = code
    return best


def test_class_counts():
    assert [len(graphs_of_order(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert len(graphs_up_to(5)) == 52


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classes_match_exhaustive_labelled_enumeration(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    classes = set()
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for k, e in enumerate(pairs) if bits >> k & 1])
        classes.add(brute_code(g))
    assert len(classes) == len(graphs_of_order(n))


def test_representatives_pairwise_non_isomorphic():
    reps = graphs_of_order(5)
    for i, g in enumerate(reps):
        for h in reps[i + 1:]:
            assert not is_isomorphic(g, h)


@settings(max_examples=200)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_code_invariant_under_relabelling(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    h = g.relabel(order)
    assert canonical_code(g) == canonical_code(h)
    assert is_isomorphic(canonical_graph(g), g)


@settings(max_examples=100)
@given(graphs(max_n=9), graphs(max_n=9))
def test_code_separates_classes(g, h):
    if g.n == h.n:
        assert (canonical_code(g) == canonical_code(h)) == is_isomorphic(g, h)
