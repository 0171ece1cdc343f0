"""Signed graph model, SGF I/O and plain-graph utilities."""

from src.sgraph.bipartite import NonBipartite, bipartition, is_bipartite, two_colour
from src.sgraph.graph import (
    DanglingEndpoint,
    DuplicateEdge,
    DuplicateVertex,
    Edge,
    InvalidVertexName,
    Sign,
    SignedGraph,
    SignedGraphError,
    UnknownVertex,
    plain_graph,
    underlying,
    validate,
)
from src.sgraph.sgf import SGFSyntaxError, dump, load, parse, serialize, to_dot

__all__ = [
    # Model
    "Edge",
    "Sign",
    "SignedGraph",
    "plain_graph",
    "underlying",
    "validate",
    # Errors
    "DanglingEndpoint",
    "DuplicateEdge",
    "DuplicateVertex",
    "InvalidVertexName",
    "SGFSyntaxError",
    "SignedGraphError",
    "UnknownVertex",
    # I/O
    "dump",
    "load",
    "parse",
    "serialize",
    "to_dot",
    # Bipartiteness
    "NonBipartite",
    "bipartition",
    "is_bipartite",
    "two_colour",
]
