import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from prismroles.graph import (Graph, complement, complete, complete_bipartite, components,
                              cycle, degree_profile, find_isomorphism, is_bipartite,
                              is_complete, is_complete_bipartite_component, is_isomorphic,
                              is_star_component, matching, path, star, triangles, union,
                              brute_isomorphic)


def test_complement_of_triangle_is_empty():
    assert complement(complete(3)) == Graph.empty(3)


def test_double_complement_of_path():
    assert complement(complement(path(4))) == path(4)


def test_c5_is_self_complementary_by_exhaustive_maps():
    c5, comp = cycle(5), complement(cycle(5))
    hits = [p for p in permutations(range(5))
            if all(comp.has_edge(p[u], p[v]) for u, v in c5.edges())]
    assert (0, 2, 4, 1, 3) in hits


def test_components_of_k1_plus_path3():
    comps = components(union(Graph.empty(1), star(2)))
    assert len(comps) == 2
    assert all(c.is_bipartite for c in comps)


def test_c5_single_non_bipartite_component():
    comps = components(cycle(5))
    assert len(comps) == 1 and not comps.components[0].is_bipartite


def test_perfect_matching_components():
    comps = components(matching(4))
    assert len(comps) == 4
    assert all(sorted(map(len, c.bipartition)) == [1, 1] for c in comps)


def test_degree_profile_star():
    prof = degree_profile(star(3))
    assert list(prof.degrees) == [3, 1, 1, 1]
    assert prof.isolated == set() and prof.leaves == {1, 2, 3}


def test_degree_profile_k1_plus_k2():
    prof = degree_profile(union(Graph.empty(1), complete(2)))
    assert prof.isolated == {0} and prof.leaves == {1, 2}


def test_shape_recognisers():
    assert is_complete(complete(4))
    assert is_complete(Graph.empty(1))
    assert is_complete_bipartite_component(components(cycle(4)).components[0]) == (2, 2)
    assert is_complete_bipartite_component(components(path(4)).components[0]) is None
    assert is_star_component(components(star(4)).components[0]) == 4
    assert is_star_component(components(complete(2)).components[0]) == 1
    assert is_star_component(components(cycle(4)).components[0]) is None


def test_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph.from_rows([0b10, 0b00])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_triangles_listed_once():
    assert list(triangles(complete(4))) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


@given(graphs(max_n=20))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_complement_involution_up_to_64():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 64), rng.random())
        c = complement(g)
        assert c.edge_count() == g.n * (g.n - 1) // 2 - g.edge_count()
        assert complement(c) == g


@given(graphs(max_n=20))
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.edge_count()


def _odd_closed_walk(g, comp):
    # BFS layers; an edge inside a layer closes an odd cycle
    root = comp.vertices[0]
    dist, parent, queue = {root: 0}, {root: root}, [root]
    for v in queue:
        for u in g.neighbors(v):
            if u not in dist:
                dist[u], parent[u] = dist[v] + 1, v
                queue.append(u)
    for u, v in g.edges():
        if u in dist and dist[u] == dist[v]:
            a, b = [u], [v]
            while a[-1] != b[-1]:
                a.append(parent[a[-1]])
                b.append(parent[b[-1]])
            return a + b[-2::-1]
    return None


@given(graphs(max_n=14))
def test_bipartitions_are_sound(g):
    for comp in components(g):
        if comp.is_bipartite:
            side = {v: 0 for v in comp.bipartition[0]} | {v: 1 for v in comp.bipartition[1]}
            assert set(side) == set(comp.vertices)
            for u, v in g.edges():
                if u in side:
                    assert side[u] != side[v]
        else:
            walk = _odd_closed_walk(g, comp)
            assert walk is not None and len(walk) % 2 == 1
            for x, y in zip(walk, walk[1:] + walk[:1]):
                assert g.has_edge(x, y)


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_complete_bipartite_matches_brute_force(g):
    for comp in components(g):
        sub = g.induced(comp.vertices)
        found = is_complete_bipartite_component(comp)
        expected = None
        for a in range(1, sub.n // 2 + 1):
            if brute_isomorphic(sub, complete_bipartite(a, sub.n - a)):
                expected = (a, sub.n - a)
        assert found == expected


@settings(max_examples=100)
@given(graphs(max_n=7))
def test_isomorphism_search_agrees_with_permutations(g):
    h = g.relabel(list(reversed(range(g.n))))
    assert is_isomorphic(g, h)
    phi = find_isomorphism(g, h)
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())
    other = complement(g)
    assert is_isomorphic(g, other) == brute_isomorphic(g, other)


def test_bipartite_helper():
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(7))
