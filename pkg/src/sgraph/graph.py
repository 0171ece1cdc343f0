"""
Signed graph data model.

A signed graph is an ordered tuple of vertex names plus a set of signed edges.
Loops are allowed and a vertex pair carries at most one edge of each sign, so a
pair with both signs is a negative digon (or, on a single vertex, a vertex with
both loops). Graphs are immutable: every operation returns a new graph.
"""

import logging
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx
import numpy as np

from config.settings import Limits

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Exceptions
# -----------------------------------------------------------------------------


class SignedGraphError(Exception):
    """Base exception for malformed signed graphs."""

    pass


class DuplicateEdge(SignedGraphError):
    """The same vertex pair carries two edges of the same sign."""

    pass


class DanglingEndpoint(SignedGraphError):
    """An edge endpoint is not a declared vertex."""

    pass


class DuplicateVertex(SignedGraphError):
    """A vertex name is declared twice."""

    pass


class InvalidVertexName(SignedGraphError):
    """A vertex name is empty or cannot be written to SGF."""

    pass


class UnknownVertex(SignedGraphError):
    """An operation referenced a vertex outside the graph."""

    pass


# -----------------------------------------------------------------------------
# Signs and edges
# -----------------------------------------------------------------------------


class Sign(str, Enum):
    """Element of the multiplicative group {+, -}."""

    POSITIVE = Limits.POSITIVE_GLYPH
    NEGATIVE = Limits.NEGATIVE_GLYPH

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign.POSITIVE if self is other else Sign.NEGATIVE

    def __neg__(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    def __str__(self) -> str:
        return self.value

    @property
    def is_negative(self) -> bool:
        return self is Sign.NEGATIVE

    @classmethod
    def parse(cls, glyph: "str | Sign") -> "Sign":
        """Parse '+', '-' (or the typographic minus) into a Sign."""
        if isinstance(glyph, Sign):
            return glyph
        if glyph == "+":
            return cls.POSITIVE
        if glyph in ("-", "−"):
            return cls.NEGATIVE
        raise ValueError(f"Not a sign: {glyph!r}")

    @classmethod
    def product(cls, signs: Iterable["Sign"]) -> "Sign":
        result = cls.POSITIVE
        for s in signs:
            result = result * s
        return result


@dataclass(frozen=True)
class Edge:
    """A signed edge; u == v encodes a loop."""

    u: str
    v: str
    sign: Sign

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    def other(self, x: str) -> str:
        """Return the endpoint opposite to x."""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise UnknownVertex(f"{x} is not an endpoint of {self.label()}")

    def label(self) -> str:
        return f"{self.u} {self.v} {self.sign.value}"

    def __str__(self) -> str:
        return self.label()


EdgeLike = Edge | tuple[str, str, "Sign | str"]


def _coerce_edge(e: EdgeLike) -> Edge:
    if isinstance(e, Edge):
        return e
    u, v, s = e
    return Edge(str(u), str(v), Sign.parse(s))


def _check_name(name: str) -> None:
    if not name or any(ch.isspace() for ch in name) or name.startswith(Limits.COMMENT_PREFIX):
        raise InvalidVertexName(f"Invalid vertex name: {name!r}")


def _canonical_edges(vertices: tuple[str, ...], edges: Iterable[EdgeLike]) -> tuple[Edge, ...]:
    index: dict[str, int] = {}
    for name in vertices:
        _check_name(name)
        if name in index:
            raise DuplicateVertex(f"Vertex {name} declared twice")
        index[name] = len(index)

    seen: dict[tuple[int, int, Sign], Edge] = {}
    for raw in edges:
        e = _coerce_edge(raw)
        for endpoint in (e.u, e.v):
            if endpoint not in index:
                raise DanglingEndpoint(f"Edge {e.label()} uses undeclared vertex {endpoint}")
        i, j = sorted((index[e.u], index[e.v]))
        key = (i, j, e.sign)
        if key in seen:
            raise DuplicateEdge(f"Duplicate {e.sign.value} edge on {e.u} {e.v}")
        seen[key] = Edge(vertices[i], vertices[j], e.sign)

    order = sorted(seen, key=lambda k: (k[0], k[1], k[2].is_negative))
    return tuple(seen[k] for k in order)


# -----------------------------------------------------------------------------
# Signed graph
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedGraph:
    """
    Immutable signed graph.

    Edges are stored canonically: oriented by vertex index and sorted by
    (first index, second index, + before -). Two graphs with the same vertex
    order and signature compare equal.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", _canonical_edges(vertices, self.edges))

    # ---- basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.index

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def require(self, vertex: str) -> int:
        """Return the index of a vertex, raising UnknownVertex if absent."""
        try:
            return self.index[vertex]
        except KeyError:
            raise UnknownVertex(f"Unknown vertex: {vertex}") from None

    @cached_property
    def _pair_signs(self) -> dict[frozenset[str], frozenset[Sign]]:
        signs: dict[frozenset[str], set[Sign]] = {}
        for e in self.edges:
            signs.setdefault(e.pair, set()).add(e.sign)
        return {pair: frozenset(s) for pair, s in signs.items()}

    def pair_signs(self, u: str, v: str) -> frozenset[Sign]:
        """Signs of the edges joining u and v (a loop when u == v)."""
        return self._pair_signs.get(frozenset((u, v)), frozenset())

    def loop_signs(self, v: str) -> frozenset[Sign]:
        return self.pair_signs(v, v)

    def has_edge(self, u: str, v: str, sign: Sign | None = None) -> bool:
        signs = self.pair_signs(u, v)
        return bool(signs) if sign is None else sign in signs

    def edge(self, u: str, v: str, sign: Sign) -> Edge:
        """Return the canonical edge record joining u and v with the given sign."""
        for e in self.edges:
            if e.pair == frozenset((u, v)) and e.sign is sign:
                return e
        raise UnknownVertex(f"No {sign.value} edge on {u} {v}")

    @cached_property
    def adjacent_pairs(self) -> tuple[tuple[str, str], ...]:
        """Distinct non-loop adjacent pairs in canonical order."""
        pairs: list[tuple[str, str]] = []
        seen: set[frozenset[str]] = set()
        for e in self.edges:
            if not e.is_loop and e.pair not in seen:
                seen.add(e.pair)
                pairs.append((e.u, e.v))
        return tuple(pairs)

    @cached_property
    def digons(self) -> tuple[tuple[str, str], ...]:
        return tuple(p for p in self.adjacent_pairs if len(self.pair_signs(*p)) == 2)

    @property
    def has_digon(self) -> bool:
        return bool(self.digons)

    @cached_property
    def loops(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_loop)

    def has_loop(self, sign: Sign | None = None) -> bool:
        return any(sign is None or e.sign is sign for e in self.loops)

    @property
    def negative_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.sign.is_negative)

    def neighbours(self, v: str) -> list[tuple[str, Sign]]:
        """Non-loop neighbours of v with the sign of each joining edge."""
        self.require(v)
        return [(e.other(v), e.sign) for e in self.edges if not e.is_loop and v in (e.u, e.v)]

    def degree(self, v: str) -> int:
        return len({w for w, _ in self.neighbours(v)})

    # ---- matrices ------------------------------------------------------------

    def adjacency(self, sign: Sign) -> np.ndarray:
        """Symmetric boolean matrix of the edges of one sign (loops on the diagonal)."""
        return self._positive_matrix if sign is Sign.POSITIVE else self._negative_matrix

    def _matrix(self, sign: Sign) -> np.ndarray:
        m = np.zeros((self.order, self.order), dtype=bool)
        for e in self.edges:
            if e.sign is sign:
                i, j = self.index[e.u], self.index[e.v]
                m[i, j] = m[j, i] = True
        m.setflags(write=False)
        return m

    @cached_property
    def _positive_matrix(self) -> np.ndarray:
        return self._matrix(Sign.POSITIVE)

    @cached_property
    def _negative_matrix(self) -> np.ndarray:
        return self._matrix(Sign.NEGATIVE)

    # ---- derived graphs ------------------------------------------------------

    def induced(self, vertices: Iterable[str]) -> "SignedGraph":
        """Subgraph induced on the given vertices, in this graph's vertex order."""
        keep = set(vertices)
        for v in keep:
            self.require(v)
        return SignedGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e.u in keep and e.v in keep),
        )

    def remove_vertex(self, vertex: str) -> "SignedGraph":
        self.require(vertex)
        return self.induced(v for v in self.vertices if v != vertex)

    def relabel(self, mapping: Mapping[str, str]) -> "SignedGraph":
        """Rename vertices; names missing from the mapping are kept."""
        name = lambda v: mapping.get(v, v)  # noqa: E731
        return SignedGraph(
            tuple(name(v) for v in self.vertices),
            tuple(Edge(name(e.u), name(e.v), e.sign) for e in self.edges),
        )

    def positive_part(self) -> "SignedGraph":
        return SignedGraph(self.vertices, tuple(e for e in self.edges if not e.sign.is_negative))

    def _resigned(self, sign_of: Callable[[Edge], Sign]) -> "SignedGraph":
        edges = []
        for e in self.edges:
            if len(self.pair_signs(e.u, e.v)) == 2:
                edges.append(e)
            else:
                edges.append(Edge(e.u, e.v, sign_of(e)))
        return SignedGraph(self.vertices, tuple(edges))

    def with_signature(self, negative: Iterable[tuple[str, str]]) -> "SignedGraph":
        """
        Re-sign the single edges: pairs listed in `negative` become negative,
        every other single edge positive. Digons and both-loop vertices are kept.
        """
        neg = {frozenset(p) for p in negative}
        return self._resigned(lambda e: Sign.NEGATIVE if e.pair in neg else Sign.POSITIVE)

    def all_positive(self) -> "SignedGraph":
        return self._resigned(lambda e: Sign.POSITIVE)

    def all_negative(self) -> "SignedGraph":
        return self._resigned(lambda e: Sign.NEGATIVE)

    # ---- networkx interop ----------------------------------------------------

    def to_networkx(self, loops: bool = True) -> nx.Graph:
        """Underlying simple graph; each edge carries the set of its signs."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            if e.is_loop and not loops:
                continue
            graph.add_edge(e.u, e.v, signs=self.pair_signs(e.u, e.v))
        return graph

    @cached_property
    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return nx.is_connected(self.to_networkx(loops=False))

    def components(self) -> list[tuple[str, ...]]:
        """Connected components, each in vertex order, ordered by first vertex."""
        comps = nx.connected_components(self.to_networkx(loops=False))
        ordered = [tuple(v for v in self.vertices if v in c) for c in comps]
        return sorted(ordered, key=lambda c: self.index[c[0]])

    def iter_edges_at(self, v: str) -> Iterator[Edge]:
        return (e for e in self.edges if v in (e.u, e.v))

    def __str__(self) -> str:
        return f"SignedGraph({self.order} vertices, {self.size} edges)"


# -----------------------------------------------------------------------------
# Module-level operations
# -----------------------------------------------------------------------------


def validate(g: SignedGraph) -> None:
    """Re-check every SignedGraph invariant; raises on the first violation."""
    _canonical_edges(g.vertices, g.edges)


def underlying(g: SignedGraph) -> SignedGraph:
    """Forget signs: one positive edge per adjacent pair, one positive loop per looped vertex."""
    pairs = {e.pair: (e.u, e.v) for e in g.edges}
    return SignedGraph(g.vertices, tuple((u, v, Sign.POSITIVE) for u, v in pairs.values()))


def plain_graph(vertices: Iterable[str], pairs: Iterable[tuple[str, str]]) -> SignedGraph:
    """All-positive graph from an edge list; repeated pairs collapse."""
    unique = {frozenset(p): p for p in pairs}
    return SignedGraph(tuple(vertices), tuple((u, v, Sign.POSITIVE) for u, v in unique.values()))
