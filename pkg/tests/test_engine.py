import json
import warnings

import pytest
from hypothesis import given, settings

from dtdlab.engine import (
    INFEASIBLE,
    Mode,
    OutOfScopeWarning,
    Searcher,
    SolveConstraints,
    bad_edges,
    domination_modes,
    dtd_number,
    good_edges,
    good_vertices,
    is_dtd_set,
    is_edge_minimal,
    is_half_minimal,
    is_special_vertex,
    is_td_set,
    ndtd_dominates_pendant_exists,
    ndtd_number,
    special_vertices,
    td_number,
)
from dtdlab.families import FIG_SPECIAL, build_graph, cycle, path
from dtdlab.graph import GraphError, VertexSet, add_pendant, graph_from_edges
from tests.oracles import brute_dtd, brute_good_edges, brute_good_vertices, brute_td, colex_key, dt_ok, to_nx
from tests.test_graph import graphs


def test_small_values():
    assert dtd_number(cycle(3)).value == 2
    assert dtd_number(cycle(4)).value == 2
    assert dtd_number(cycle(7)).value == 4
    assert dtd_number(path(2)).value == 2


def test_witness_is_colex_least():
    for g in (cycle(7), cycle(10), path(9), build_graph("B3"), build_graph("D(3,7)")):
        value, sets = brute_dtd(g)
        cert = dtd_number(g)
        assert cert.value == value
        assert tuple(cert.witness.to_list()) == min(sets, key=colex_key)


def test_infeasible_is_a_value():
    g = graph_from_edges(3, [(0, 1)])
    assert dtd_number(g) == INFEASIBLE and not dtd_number(g).feasible
    assert dtd_number(g).to_dict()["feasible"] is False


def test_constraints():
    c6 = cycle(6)
    cert = dtd_number(c6, SolveConstraints(must_include=VertexSet.of(6, [5])))
    assert 5 in cert.witness and cert.value == 3
    cert = dtd_number(c6, SolveConstraints(must_exclude=VertexSet.of(6, [0, 1, 2])))
    assert not {0, 1, 2} & set(cert.witness)
    assert not dtd_number(c6, SolveConstraints(target_cardinality=2)).feasible
    with pytest.raises(GraphError):
        dtd_number(c6, SolveConstraints(VertexSet.of(6, [1]), VertexSet.of(6, [1])))


def test_modes_and_certificate_json():
    g = cycle(7)
    cert = dtd_number(g)
    assert len(cert.modes) == 7 and Mode.NONE not in cert.modes
    data = json.loads(cert.to_json())
    assert set(data) >= {"value", "witness", "modes"}
    # vertex 5 of C7 with S = {0,1,2,3} sees 3 and 0 at distance 2 only
    assert domination_modes(g, VertexSet.of(7, [0, 1, 2, 3]))[5] == Mode.DISJUNCTIVE
    assert not is_dtd_set(g, VertexSet.of(7, [0, 1]))
    assert is_td_set(path(4), VertexSet.of(4, [1, 2]))


def test_td_at_least_dtd():
    for g in (cycle(8), path(7), build_graph("B2")):
        assert td_number(g).value >= dtd_number(g).value


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_solver_matches_brute_force(g):
    value, sets = brute_dtd(g)
    cert = dtd_number(g)
    assert cert.value == value
    if value is not None:
        assert tuple(cert.witness.to_list()) == min(sets, key=colex_key)
        assert is_dtd_set(g, cert.witness)
    assert td_number(g).value == brute_td(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_good_sets_match_brute_force(g):
    if brute_dtd(g)[0] is None:
        with pytest.raises(GraphError):
            good_vertices(g)
        return
    assert good_vertices(g).to_list() == brute_good_vertices(g)
    assert good_edges(g) == brute_good_edges(g)
    assert set(bad_edges(g)) | set(good_edges(g)) == set(g.edges())


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_iter_minimum_sets_complete(g):
    value, sets = brute_dtd(g)
    if value is None:
        return
    got = sorted(Searcher(g).iter_minimum_sets(value))
    assert got == sorted(colex_key(s) for s in sets)


def test_ndtd():
    c7 = cycle(7)
    cert = ndtd_number(c7, 0)
    assert cert.value == 3 and 7 in cert.witness
    assert not ndtd_dominates_pendant_exists(c7, 0)
    # brute force on G^v: sets containing the pendant that DT-dominate V(G)
    import itertools
    import networkx as nx

    gv, leaf = add_pendant(c7, 0)
    d = dict(nx.all_pairs_shortest_path_length(to_nx(gv)))
    best = min(len(s) for k in range(1, 9) for s in itertools.combinations(range(8), k)
               if leaf in s and all(dt_ok(d, v, s) for v in range(7)))
    assert best == 3


def test_special_vertices_match_figure():
    for name, marked in FIG_SPECIAL.items():
        g = build_graph(name)
        assert special_vertices(g).to_list() == sorted(marked), name


def test_special_out_of_scope_warns():
    k4 = graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert not is_edge_minimal(k4)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        is_special_vertex(k4, 0)
    assert any(issubclass(w.category, OutOfScopeWarning) for w in caught)


def test_minimality():
    assert is_edge_minimal(cycle(5)) and is_half_minimal(cycle(5))
    assert is_half_minimal(build_graph("B1"))
    assert not is_half_minimal(cycle(10))
    assert not is_edge_minimal(build_graph("F1"))
