"""Exact adjacency dimension of small graphs, with a census and exhaustive checks."""

from .canon import canonical_form, canonical_graph6, enumerate_graphs, is_isomorphic
from .census import CensusRecord, compute_record, read_jsonl, run_census, write_jsonl
from .errors import AdjDimError
from .families import FamilySpec, extremal_diameter_graph, example_six_vertex, make_named, omega_member
from .graph import (
    DISCONNECTED,
    Graph,
    bfs_distances,
    complement,
    diameter,
    disjoint_union,
    from_edges,
    join,
    twin_partition,
)
from .graph6 import graph6_decode, graph6_encode
from .solver import (
    DimensionResult,
    adjacency_dimension,
    is_adjacency_resolving,
    is_metric_resolving,
    metric_dimension,
)
from .verify import VerificationReport, run_checks

__all__ = [
    "AdjDimError", "CensusRecord", "DISCONNECTED", "DimensionResult", "FamilySpec", "Graph",
    "VerificationReport", "adjacency_dimension", "bfs_distances", "canonical_form",
    "canonical_graph6", "complement", "compute_record", "diameter", "disjoint_union",
    "enumerate_graphs", "example_six_vertex", "extremal_diameter_graph", "from_edges",
    "graph6_decode", "graph6_encode", "is_adjacency_resolving", "is_isomorphic",
    "is_metric_resolving", "join", "make_named", "metric_dimension", "omega_member",
    "read_jsonl", "run_census", "run_checks", "twin_partition", "write_jsonl",
]
