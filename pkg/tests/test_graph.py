import math

import pytest
from hypothesis import given, settings, strategies as st

from dtdlab.families import build_graph, cycle, path
from dtdlab.graph import (
    INF,
    GraphError,
    VertexSet,
    add_pendant,
    delete_edge,
    delete_vertex,
    disjoint_union,
    distance_matrix,
    graph_from_edges,
    induced,
    is_claw_free,
    is_connected,
    max_degree,
    min_degree,
    subdivide_edge,
)
from tests.oracles import brute_isomorphic, to_nx


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


def test_triangle_and_square():
    c3 = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert c3.size == 3 and c3.degrees() == [2, 2, 2]
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)])
    assert c4.size == 4


def test_b1_is_k23():
    k23 = graph_from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert brute_isomorphic(k23, build_graph("B1"))


@pytest.mark.parametrize("n, edges", [(0, []), (65, []), (3, [(0, 3)]), (3, [(1, 1)])])
def test_bad_construction(n, edges):
    with pytest.raises(GraphError):
        graph_from_edges(n, edges)


def test_vertex_set_bounds():
    with pytest.raises(GraphError):
        VertexSet(1 << 5, 5)
    assert VertexSet.of(6, [4, 1]).to_list() == [1, 4]


def test_distances():
    assert distance_matrix(cycle(4))[0][2] == 2
    assert distance_matrix(path(4))[0][3] == 3
    d = distance_matrix(graph_from_edges(4, [(0, 1), (2, 3)]))
    assert d[0][2] == INF and math.isinf(d[0][2])


def test_degrees_and_connectivity():
    c5 = cycle(5)
    assert is_connected(c5) and min_degree(c5) == 2 and max_degree(c5) == 2
    d33 = build_graph("D(3,3)")
    assert min_degree(d33) == 2 and max_degree(d33) == 4
    assert not is_connected(disjoint_union(cycle(3), cycle(3)))
    assert is_connected(graph_from_edges(1, []))


def test_surgeries():
    assert brute_isomorphic(delete_edge(cycle(4), (0, 1)), path(4))
    k4 = graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    g, mapping = delete_vertex(k4, 2)
    assert brute_isomorphic(g, cycle(3)) and mapping == {0: 0, 1: 1, 3: 2}
    sub, _ = induced(cycle(5), VertexSet.of(5, [0, 1, 2]))
    assert brute_isomorphic(sub, path(3))
    with pytest.raises(GraphError):
        delete_edge(cycle(5), (0, 2))


def test_subdivision_and_pendant():
    assert brute_isomorphic(subdivide_edge(cycle(3), (0, 1), 4), cycle(7))
    assert brute_isomorphic(subdivide_edge(path(2), (0, 1), 1), path(3))
    assert brute_isomorphic(subdivide_edge(cycle(4), (2, 3), 4), cycle(8))
    g, leaf = add_pendant(cycle(4), 0)
    assert leaf == 4 and g.degree(4) == 1
    g, leaf = add_pendant(path(2), 1)
    assert brute_isomorphic(g, path(3))
    with pytest.raises(GraphError):
        subdivide_edge(cycle(60), (0, 1), 5)


def test_claw_free():
    assert is_claw_free(cycle(6))
    assert not is_claw_free(graph_from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_claw_free(build_graph("B1"))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2))
def test_distance_matrix_matches_networkx(g):
    import networkx as nx

    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    d = distance_matrix(g)
    for u in range(g.n):
        assert d[u][u] == 0
        for v in range(g.n):
            assert d[u][v] == ref[u].get(v, INF)
            assert d[u][v] == d[v][u]


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2), st.data())
def test_edge_deletion_never_shortens(g, data):
    if not g.size:
        return
    e = data.draw(st.sampled_from(g.edges()))
    before, after = distance_matrix(g), distance_matrix(delete_edge(g, e))
    assert all(after[u][v] >= before[u][v] for u in range(g.n) for v in range(g.n))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2), st.integers(1, 6), st.data())
def test_subdivision_counts(g, k, data):
    if not g.size:
        return
    e = data.draw(st.sampled_from(g.edges()))
    h = subdivide_edge(g, e, k)
    assert h.n == g.n + k and h.size == g.size + k
    assert all(h.degree(v) == 2 for v in range(g.n, h.n))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_claw_free_brute_force(g):
    from itertools import combinations

    claw = any(
        all(not g.has_edge(a, b) for a, b in combinations(trio, 2))
        for v in range(g.n)
        for trio in combinations(g.neighbors(v), 3)
    )
    assert is_claw_free(g) == (not claw)
