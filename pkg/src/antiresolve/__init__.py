"""Resistance of graphs to sybil-based re-identification, and edge-edit repairs."""

from .antiresolving import (
    AnonymityReport,
    ClassPartition,
    Flavor,
    Representation,
    anonymity_value,
    antiresolving_k,
    enumerate_bad_sets,
    is_transformation,
    k1_upper_bound,
    k1_value_formula,
    k_adjacency_antidimension,
    k_antidimension,
    partition,
    representation,
)
from .graph import Graph, adjacency_value, build_graph, classify_vertices, distance, induced_subgraph
from .io import fixtures, generate_random, parse_edge_list, serialize_edge_list
from .loss import LossReport, compute_loss
from .transform_2ell import breaks_fixed_sets, candidate_pairs, score_pair, transform_2ell
from .transform_k1 import EditScript, K1Report, bounds_added, bounds_removed, transform_k1

__version__ = "0.1.0"

__all__ = [
    "AnonymityReport", "ClassPartition", "EditScript", "Flavor", "Graph", "K1Report",
    "LossReport", "Representation", "adjacency_value", "anonymity_value", "antiresolving_k",
    "bounds_added", "bounds_removed", "breaks_fixed_sets", "build_graph", "candidate_pairs",
    "classify_vertices", "compute_loss", "distance", "enumerate_bad_sets", "fixtures",
    "generate_random", "induced_subgraph", "is_transformation", "k1_upper_bound",
    "k1_value_formula", "k_adjacency_antidimension", "k_antidimension", "parse_edge_list",
    "partition", "representation", "score_pair", "serialize_edge_list", "transform_2ell",
    "transform_k1",
]
