"""
Homomorphism solvers.

All searches run through HomSearch. s-homomorphisms to h are ec-homomorphisms
to the switching graph P(h): a source vertex whose image lies on the 1-copy is
switched, and the image projects back to h.
"""

import logging
from collections.abc import Iterable, Mapping

import numpy as np

from src.construct.switching_graph import PairedGraph, switching_graph
from src.models.witnesses import HomKind, HomWitness
from src.sgraph.graph import Edge, Sign, SignedGraph, SignedGraphError, underlying
from src.solve.search import HomSearch

logger = logging.getLogger(__name__)


class NotASubgraph(SignedGraphError):
    """The retraction target is not a subgraph of the source."""

    pass


Pins = Mapping[str, str | Iterable[str]]


def _domains(source: SignedGraph, target: SignedGraph, pins: Pins | None) -> np.ndarray:
    domains = np.ones((source.order, target.order), dtype=bool)
    for v, allowed in (pins or {}).items():
        row = domains[source.require(v)]
        row[:] = False
        for image in [allowed] if isinstance(allowed, str) else allowed:
            if image in target:
                row[target.index[image]] = True
    return domains


def _needs_edge_map(target: SignedGraph) -> bool:
    return target.has_digon or any(len(target.loop_signs(e.u)) == 2 for e in target.loops)


def _edge_map(
    source: SignedGraph,
    target: SignedGraph,
    mapping: Mapping[str, str],
    switch_set: Iterable[str] = (),
) -> dict[str, str]:
    xs = set(switch_set)
    return {
        e.label(): target.edge(mapping[e.u], mapping[e.v], image_sign(e, xs)).label()
        for e in source.edges
    }


# -----------------------------------------------------------------------------
# ec- and plain homomorphisms
# -----------------------------------------------------------------------------


def ec_hom(
    g: SignedGraph,
    h: SignedGraph,
    *,
    pins: Pins | None = None,
    injective: bool = False,
) -> HomWitness | None:
    """
    Find an edge-colour-preserving homomorphism g -> h.

    Args:
        g: Source graph
        h: Target graph
        pins: Optional allowed images per source vertex (one name or several)
        injective: Require distinct images

    Returns:
        The canonically first witness, or None if there is no homomorphism
    """
    search = HomSearch(
        g,
        h,
        domains=_domains(g, h, pins),
        classes=np.arange(h.order) if injective else None,
    )
    solution = search.first()
    if solution is None:
        return None
    mapping = {v: h.vertices[t] for v, t in zip(g.vertices, solution)}
    edge_map = _edge_map(g, h, mapping) if _needs_edge_map(h) else None
    return HomWitness(kind=HomKind.EC, mapping=mapping, edge_map=edge_map)


def hom(g: SignedGraph, h: SignedGraph) -> HomWitness | None:
    """Homomorphism of the underlying plain graphs (signs are ignored)."""
    witness = ec_hom(underlying(g), underlying(h))
    if witness is None:
        return None
    return HomWitness(kind=HomKind.PLAIN, mapping=witness.mapping)


def ec_retract(g: SignedGraph, h: SignedGraph) -> HomWitness | None:
    """
    Find an ec-homomorphism g -> h that is the identity on h.

    Raises:
        NotASubgraph: if h's vertices or signed edges are missing from g
    """
    for v in h.vertices:
        if v not in g:
            raise NotASubgraph(f"vertex {v} is not in the source")
    for e in h.edges:
        if not g.has_edge(e.u, e.v, e.sign):
            raise NotASubgraph(f"edge {e.label()} is not in the source")
    return ec_hom(g, h, pins={v: v for v in h.vertices})


def ec_isomorphism(g: SignedGraph, h: SignedGraph) -> HomWitness | None:
    """An edge-preserving bijection (equal sizes make it onto the edges too)."""
    if g.order != h.order or g.size != h.size:
        return None
    return ec_hom(g, h, injective=True)


# -----------------------------------------------------------------------------
# s-homomorphisms
# -----------------------------------------------------------------------------


def _project(
    g: SignedGraph,
    h: SignedGraph,
    paired: PairedGraph,
    solution: tuple[int, ...],
) -> HomWitness:
    mapping: dict[str, str] = {}
    switch_set: list[str] = []
    for v, t in zip(g.vertices, solution):
        original, bit = paired.projection[paired.graph.vertices[t]]
        mapping[v] = original
        if bit:
            switch_set.append(v)
    edge_map = _edge_map(g, h, mapping, switch_set) if _needs_edge_map(h) else None
    return HomWitness(
        kind=HomKind.S, mapping=mapping, switch_set=tuple(switch_set), edge_map=edge_map
    )


def _paired_pins(paired: PairedGraph, pins: Pins | None) -> dict[str, list[str]] | None:
    if pins is None:
        return None
    out: dict[str, list[str]] = {}
    for v, allowed in pins.items():
        images = [allowed] if isinstance(allowed, str) else list(allowed)
        out[v] = [paired.copy(a, bit) for a in images if a in paired.pairing for bit in (0, 1)]
    return out


def s_hom(g: SignedGraph, h: SignedGraph, *, pins: Pins | None = None) -> HomWitness | None:
    """
    Find an s-homomorphism g -> h via an ec-homomorphism into P(h).

    The switch set is the set of source vertices whose image lies on the
    1-copy; pins name allowed vertices of h.
    """
    paired = switching_graph(h)
    domains = _domains(g, paired.graph, _paired_pins(paired, pins))
    search = HomSearch(g, paired.graph, domains=domains)
    solution = search.first()
    if solution is None:
        return None
    return _project(g, h, paired, solution)


def s_hom_paired(g: SignedGraph, h: SignedGraph) -> HomWitness | None:
    """ec-homomorphism P(g) -> P(h), the third equivalent form of g -> h."""
    return ec_hom(switching_graph(g).graph, switching_graph(h).graph)


def s_retract(g: SignedGraph, vertices: Iterable[str]) -> HomWitness | None:
    """
    s-homomorphism from g onto its induced subgraph on `vertices` that sends
    each of those vertices to itself (possibly switched).
    """
    keep = list(vertices)
    sub = g.induced(keep)
    return s_hom(g, sub, pins={v: v for v in keep})


def s_isomorphism(g: SignedGraph, h: SignedGraph) -> HomWitness | None:
    """A bijective s-homomorphism; at most one copy of each h vertex is used."""
    if g.order != h.order or g.size != h.size:
        return None
    paired = switching_graph(h)
    classes = np.array(
        [h.index[paired.projection[pv][0]] for pv in paired.graph.vertices], dtype=int
    )
    search = HomSearch(g, paired.graph, classes=classes)
    solution = search.first()
    if solution is None:
        return None
    return _project(g, h, paired, solution)


def image_sign(edge: Edge, switch_set: Iterable[str]) -> Sign:
    """Sign of an edge after switching (loops keep their sign)."""
    xs = set(switch_set)
    if edge.is_loop or (edge.u in xs) == (edge.v in xs):
        return edge.sign
    return -edge.sign
