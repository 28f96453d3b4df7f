"""Regular graph saturation: constructions, checkers and search."""
from .checkers import (BoundReport, VerificationReport, check_inequalities, is_free, is_oversaturated,
                       is_saturated, pattern_bounds, regularity, rrsat_witness)
from .graph import Graph, Graph6Error, GraphError, build_graph, decode_graph6, diameter, encode_graph6
from .kernels import BACKEND, BACKENDS
from .patterns import PatternGraph, clique, f_prime_t, pattern_from_key, three_sun
from .subgraph import Embedding, contains_subgraph, has_clique, is_isomorphic

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BACKENDS", "BoundReport", "Embedding", "Graph", "Graph6Error", "GraphError", "PatternGraph",
    "VerificationReport", "build_graph", "check_inequalities", "clique", "contains_subgraph", "decode_graph6",
    "diameter", "encode_graph6", "f_prime_t", "has_clique", "is_free", "is_isomorphic", "is_oversaturated",
    "is_saturated", "pattern_from_key", "pattern_bounds", "regularity", "rrsat_witness", "three_sun",
]
