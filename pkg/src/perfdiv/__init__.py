"""Perfect divisibility, induced-subgraph detection and colouring for bull-free graph classes."""

from .graph import Graph, catalog, complement, complete_join, induced_subgraph, substitute
from .formats import emit_graph6, parse_graph6

__all__ = [
    "Graph",
    "catalog",
    "complement",
    "complete_join",
    "emit_graph6",
    "induced_subgraph",
    "parse_graph6",
    "substitute",
]
