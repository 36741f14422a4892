"""Exact disjunctive total domination: solver, graph families, census and CLI."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, find_isomorphism
from .engine import (
    Mode,
    SolveCertificate,
    SolveConstraints,
    domination_modes,
    dtd_number,
    good_edges,
    good_vertices,
    is_dtd_set,
    is_edge_minimal,
    is_half_minimal,
    is_special_vertex,
    ndtd_number,
    td_number,
)
from .families import FamilySpec, RootedGraph, build, build_graph, classify_extremal
from .formulas import dtd_cycle, dtd_key, dtd_path, dtd_upper_bound
from .generate import SamplerConfig, enumerate_connected_min2, sample_graphs
from .graph import DistanceMatrix, Graph, GraphError, VertexSet, distance_matrix, graph_from_edges
from .io import emit_graph6, parse_graph6

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm", "are_isomorphic", "canonical_form", "find_isomorphism",
    "Mode", "SolveCertificate", "SolveConstraints", "domination_modes", "dtd_number", "good_edges",
    "good_vertices", "is_dtd_set", "is_edge_minimal", "is_half_minimal", "is_special_vertex", "ndtd_number",
    "td_number", "FamilySpec", "RootedGraph", "build", "build_graph", "classify_extremal",
    "dtd_cycle", "dtd_key", "dtd_path", "dtd_upper_bound", "SamplerConfig", "enumerate_connected_min2",
    "sample_graphs", "DistanceMatrix", "Graph", "GraphError", "VertexSet", "distance_matrix", "graph_from_edges",
    "emit_graph6", "parse_graph6",
]
