"""
The indicator construction.

An indicator is a signed graph with two distinguished vertices i and j that
admits an ec-automorphism exchanging them. Its result on a target is the plain
graph on the target's vertices with an edge uv whenever some ec-homomorphism of
the indicator sends i to u and j to v.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from config.settings import Limits
from src.construct.errors import NoSwapAutomorphism
from src.sgraph.graph import Edge, Sign, SignedGraph
from src.solve.search import HomSearch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Indicator:
    """A signed graph with two distinguished vertices."""

    graph: SignedGraph
    i: str = Limits.INDICATOR_I
    j: str = Limits.INDICATOR_J

    def __post_init__(self):
        self.graph.require(self.i)
        self.graph.require(self.j)
        if self.i == self.j:
            raise NoSwapAutomorphism("indicator endpoints must be distinct")


def _pinned(source: SignedGraph, target: SignedGraph, pins: Mapping[str, str]) -> np.ndarray:
    domains = np.ones((source.order, target.order), dtype=bool)
    for v, image in pins.items():
        row = domains[source.index[v]]
        row[:] = False
        row[target.index[image]] = True
    return domains


def swap_automorphism(ind: Indicator) -> dict[str, str] | None:
    """Find an ec-automorphism exchanging i and j, if one exists."""
    g = ind.graph
    search = HomSearch(
        g,
        g,
        domains=_pinned(g, g, {ind.i: ind.j, ind.j: ind.i}),
        classes=np.arange(g.order),
    )
    solution = search.first()
    if solution is None:
        return None
    return {v: g.vertices[t] for v, t in zip(g.vertices, solution)}


def is_swap_automorphism(ind: Indicator, mapping: Mapping[str, str]) -> bool:
    """Check a user-supplied map: a bijection exchanging i and j that preserves every edge."""
    g = ind.graph
    if set(mapping) != set(g.vertices) or set(mapping.values()) != set(g.vertices):
        return False
    if mapping[ind.i] != ind.j or mapping[ind.j] != ind.i:
        return False
    return all(g.has_edge(mapping[e.u], mapping[e.v], e.sign) for e in g.edges)


def indicator_result(
    ind: Indicator,
    target: SignedGraph,
    automorphism: Mapping[str, str] | None = None,
) -> SignedGraph:
    """
    Apply the indicator to a target.

    Args:
        ind: The indicator
        target: Signed graph the indicator is mapped into
        automorphism: Optional swap automorphism to verify instead of searching

    Returns:
        All-positive graph on the target's vertices

    Raises:
        NoSwapAutomorphism: if i and j cannot be exchanged
    """
    if automorphism is not None:
        if not is_swap_automorphism(ind, automorphism):
            raise NoSwapAutomorphism("supplied map is not a swap automorphism")
    elif swap_automorphism(ind) is None:
        raise NoSwapAutomorphism(f"no ec-automorphism exchanges {ind.i} and {ind.j}")

    edges: list[tuple[str, str, Sign]] = []
    for a, u in enumerate(target.vertices):
        for v in target.vertices[a:]:
            domains = _pinned(ind.graph, target, {ind.i: u, ind.j: v})
            if HomSearch(ind.graph, target, domains=domains).first() is not None:
                edges.append((u, v, Sign.POSITIVE))
    logger.debug("Indicator result on %d vertices has %d edges", target.order, len(edges))
    return SignedGraph(target.vertices, tuple(edges))


# -----------------------------------------------------------------------------
# Standard indicators
# -----------------------------------------------------------------------------


def path_indicator() -> tuple[SignedGraph, str, str]:
    """The path i-c (positive), c-j (negative); it has no swap automorphism by itself."""
    graph = SignedGraph(
        ("i", "c", "j"),
        (("i", "c", Sign.POSITIVE), ("c", "j", Sign.NEGATIVE)),
    )
    return graph, "i", "j"


def symmetrize(graph: SignedGraph, i: str, j: str) -> Indicator:
    """
    Glue two copies of a two-pointed graph, i of each copy onto j of the other.

    Applied to the path indicator this gives the alternating 4-cycle with i and j
    antipodal.
    """
    inner = [v for v in graph.vertices if v not in (i, j)]
    first = {v: f"{v}{Limits.COPY_SEPARATOR}a" for v in inner} | {i: i, j: j}
    second = {v: f"{v}{Limits.COPY_SEPARATOR}b" for v in inner} | {i: j, j: i}

    vertices = (i, *(first[v] for v in inner), j, *(second[v] for v in inner))
    edges = {
        (frozenset((m[e.u], m[e.v])), e.sign): Edge(m[e.u], m[e.v], e.sign)
        for m in (first, second)
        for e in graph.edges
    }
    return Indicator(SignedGraph(vertices, tuple(edges.values())), i, j)


def alternating_square_indicator() -> Indicator:
    return symmetrize(*path_indicator())


def digon_indicator() -> Indicator:
    """
    Five-vertex indicator used on the digon with a loop of each sign.

    x and y form a negative digon, ij and the loop at c are positive, and the
    triangles icx and jcy are negative.
    """
    pos, neg = Sign.POSITIVE, Sign.NEGATIVE
    graph = SignedGraph(
        ("i", "x", "y", "j", "c"),
        (
            ("x", "y", pos),
            ("i", "j", pos),
            ("c", "c", pos),
            ("i", "c", neg),
            ("c", "x", neg),
            ("x", "i", neg),
            ("j", "c", neg),
            ("c", "y", neg),
            ("y", "j", neg),
            ("x", "y", neg),
        ),
    )
    return Indicator(graph, "i", "j")
