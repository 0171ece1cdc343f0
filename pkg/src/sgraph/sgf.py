"""
SGF (signed graph format) reader and writer, plus DOT export.

    # comment
    v u v x
    e u v +
    e v x -
    e x x -

One optional "v" line declares the vertices in canonical order; without it,
vertices are declared implicitly in order of first appearance. Each "e" line is
one edge; u == v is a loop.
"""

import logging
from collections.abc import Iterable
from pathlib import Path

from config.settings import Limits
from src.sgraph.graph import (
    DuplicateEdge,
    Edge,
    Sign,
    SignedGraph,
    SignedGraphError,
)

logger = logging.getLogger(__name__)


class SGFSyntaxError(SignedGraphError):
    """Malformed SGF text."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse(text: str) -> SignedGraph:
    """Parse SGF text into a SignedGraph (validated)."""
    declared: list[str] | None = None
    implicit: list[str] = []
    edges: list[Edge] = []
    seen: set[tuple[frozenset[str], Sign]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(Limits.COMMENT_PREFIX):
            continue
        tokens = line.split()
        keyword = tokens[0]

        if keyword == "v":
            if declared is not None:
                raise SGFSyntaxError(lineno, "second vertex declaration")
            if edges:
                raise SGFSyntaxError(lineno, "vertex declaration after edge lines")
            declared = tokens[1:]
        elif keyword == "e":
            if len(tokens) != 4:
                raise SGFSyntaxError(lineno, f"expected 'e <u> <v> <sign>', got {line!r}")
            u, v, glyph = tokens[1:]
            try:
                sign = Sign.parse(glyph)
            except ValueError:
                raise SGFSyntaxError(lineno, f"bad sign {glyph!r}") from None
            key = (frozenset((u, v)), sign)
            if key in seen:
                raise DuplicateEdge(f"line {lineno}: duplicate {sign.value} edge on {u} {v}")
            seen.add(key)
            edges.append(Edge(u, v, sign))
            for name in (u, v):
                if name not in implicit:
                    implicit.append(name)
        else:
            raise SGFSyntaxError(lineno, f"unknown record {keyword!r}")

    vertices = declared if declared is not None else implicit
    return SignedGraph(tuple(vertices), tuple(edges))


def serialize(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    """Canonical SGF text: comments, the vertex line, then edges in canonical order."""
    lines = [f"{Limits.COMMENT_PREFIX} {c}" for c in comments]
    lines.append(" ".join(["v", *g.vertices]))
    lines.extend(f"e {e.label()}" for e in g.edges)
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> SignedGraph:
    """Read and parse an SGF file."""
    logger.debug("Loading %s", path)
    return parse(Path(path).read_text())


def dump(g: SignedGraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(serialize(g, comments))


def to_dot(g: SignedGraph, name: str = "G") -> str:
    """
    Render as an undirected DOT graph.

    Positive edges are solid blue, negative edges dashed red.
    """
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{v}";' for v in g.vertices)
    for e in g.edges:
        style = 'color=red, style=dashed' if e.sign.is_negative else 'color=blue, style=solid'
        lines.append(f'  "{e.u}" -- "{e.v}" [{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
