from .bases import Graph, Subgraph, VertexSet
from .graph6 import encode_graph6, parse_graph6
from .products import (
    Base,
    Copy,
    Layer,
    Pair,
    ProductGraph,
    ProductKind,
    ProductVertexLabel,
)

__all__ = [
    "Base",
    "Copy",
    "Graph",
    "Layer",
    "Pair",
    "ProductGraph",
    "ProductKind",
    "ProductVertexLabel",
    "Subgraph",
    "VertexSet",
    "encode_graph6",
    "parse_graph6",
]
