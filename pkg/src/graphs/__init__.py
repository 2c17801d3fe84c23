# src/graphs/__init__.py
"""Graph representation, G(n, p) sampling, domination predicates and oracles."""

from .model import Graph, VertexSet
from .sampling import gnp_sample, all_graphs
from .domination import (
    is_dominating,
    is_dominating_bits,
    is_independent,
    domination_number_oracle,
    oracle_search,
    maximal_independent_set,
)
from .io import read_graph, write_graph, parse_graph, format_graph

__all__ = [
    "Graph",
    "VertexSet",
    "gnp_sample",
    "all_graphs",
    "is_dominating",
    "is_dominating_bits",
    "is_independent",
    "domination_number_oracle",
    "oracle_search",
    "maximal_independent_set",
    "read_graph",
    "write_graph",
    "parse_graph",
    "format_graph",
]
