from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdpoly.graph import (INFINITE, Graph, bipartition, bits, closed_neighborhood, distance,
                          find_claw, induced, is_claw_free, is_connected, is_independent,
                          line_graph, mask_of)

from conftest import graphs

P4 = Graph.path(4)
C4 = Graph.cycle(4)
K13 = Graph.star(3)


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.empty(129)


def test_induced_examples():
    k2 = induced(Graph.complete(3), 0b011)
    assert k2.adj == Graph.complete(2).adj
    assert induced(P4, 0).n == 0
    sub = induced(P4, mask_of([0, 2, 3]))
    assert sub.edges() == [(1, 2)]
    assert sub.origin == (0, 2, 3)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(K13, 1) == 0b1111
    assert closed_neighborhood(P4, 0) == 0
    assert closed_neighborhood(P4, 1 << 1) == 0b0111


def test_is_independent_examples():
    assert not is_independent(Graph.complete(2), 0b11)
    assert is_independent(P4, 0)
    assert is_independent(C4, mask_of([0, 2]))


def test_claw_examples():
    assert find_claw(K13) == 0b1111
    assert is_claw_free(Graph.complete(3))
    assert is_claw_free(line_graph(Graph.path(5)))
    assert line_graph(Graph.path(5)).adj == P4.adj


def test_bipartition_examples():
    assert bipartition(P4, 1 << 2) == (1 << 2, 0)
    assert bipartition(Graph.complete(3), 0b111) is None
    assert bipartition(Graph.path(3), 0b111) == (0b101, 0b010)
    with pytest.raises(ValueError):
        bipartition(P4, mask_of([0, 3]))


def test_distance_examples():
    assert distance(P4, 2, 2) == 0
    assert distance(Graph.empty(2), 0, 1) == INFINITE
    assert distance(P4, 0, 3) == 3
    assert distance(C4, 0, 2, within=mask_of([0, 1, 2])) == 2
    assert distance(C4, 0, 1, within=mask_of([0, 1, 2, 3])) == 1


def test_is_connected_examples():
    assert is_connected(P4, 1)
    assert not is_connected(Graph.empty(2), 0b11)
    assert is_connected(C4, 0b1111)
    assert not is_connected(C4, 0)


def _claw_free_brute(g):
    for u in range(g.n):
        for trio in combinations(bits(g.adj[u]), 3):
            if all(not g.has_edge(a, b) for a, b in combinations(trio, 2)):
                return False
    return True


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.data())
def test_neighbourhood_and_independence_properties(g, data):
    h = data.draw(st.integers(0, g.full))
    h2 = data.draw(st.integers(0, g.full))
    cn = closed_neighborhood(g, h)
    assert h & ~cn == 0
    assert closed_neighborhood(g, h & h2) & ~cn == 0
    # second route: pairwise edge scan
    brute = all(not g.has_edge(a, b) for a, b in combinations(bits(h), 2))
    assert is_independent(g, h) == brute
    assert is_claw_free(g) == _claw_free_brute(g)
    witness = find_claw(g)
    if witness is not None:
        sub = induced(g, witness)
        assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 1, 3]


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=9), st.data())
def test_distance_properties(g, data):
    u, v, w = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    assert distance(g, u, v) == distance(g, v, u)
    if distance(g, u, w) != INFINITE and distance(g, w, v) != INFINITE:
        assert distance(g, u, v) <= distance(g, u, w) + distance(g, w, v)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=9), st.data())
def test_bipartition_partitions(g, data):
    h = data.draw(st.integers(1, g.full))
    if not is_connected(g, h):
        return
    parts = bipartition(g, h)
    if parts is None:
        return
    a, b = parts
    assert a | b == h and a & b == 0
    assert is_independent(g, a) and is_independent(g, b)
