"""Oriented book embeddings: exact thickness, constructive 1-page embedders
and recognizers for the small critical families."""

from .graph import Arc, OrientedGraph, format_graph, parse_graph
from .layout import SPINE, BookEmbedding, format_embedding, parse_embedding, verify
from .oracle import obt

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BookEmbedding",
    "OrientedGraph",
    "SPINE",
    "format_embedding",
    "format_graph",
    "obt",
    "parse_embedding",
    "parse_graph",
    "verify",
]
