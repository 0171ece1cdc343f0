"""
ec-cores and s-cores.

A core is found by greedy vertex deletion: while the current graph maps to
itself minus some vertex, replace it by the subgraph induced on the image. The
loop stops exactly when no proper subgraph receives a homomorphism, which is
the core condition. The retraction from the input is then recovered with a
pinned search (it exists because cores are unique up to isomorphism).

s-retraction is read as an s-homomorphism onto the induced subgraph that sends
each of its vertices to itself, possibly switched.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from src.construct.switching_graph import switching_graph
from src.models.witnesses import HomWitness
from src.sgraph.graph import Sign, SignedGraph
from src.solve.homs import ec_hom, ec_retract, s_hom, s_retract
from src.switching.equivalence import switch

logger = logging.getLogger(__name__)


class CoreError(Exception):
    """Core computations contradict each other."""

    pass


@dataclass(frozen=True)
class CoreResult:
    """
    A core with the retraction onto it.

    `subgraph` is the core as an induced subgraph of the input (input signature);
    `core` is `subgraph` switched at `core_switch`. For ec-cores the two coincide.
    """

    core: SignedGraph
    retraction: HomWitness
    subgraph: SignedGraph
    core_switch: tuple[str, ...] = ()


HomFinder = Callable[[SignedGraph, SignedGraph], HomWitness | None]


def _shrink(g: SignedGraph, find: HomFinder) -> SignedGraph:
    current = g
    shrinking = True
    while shrinking:
        shrinking = False
        for v in current.vertices:
            witness = find(current, current.remove_vertex(v))
            if witness is not None:
                current = current.induced(witness.image_set)
                logger.debug("Folded onto %d vertices (dropped %s)", current.order, v)
                shrinking = True
                break
    return current


def ec_core(g: SignedGraph) -> CoreResult:
    """The ec-core of g as an induced subgraph, with an ec-retraction onto it."""
    core = _shrink(g, ec_hom)
    retraction = ec_retract(g, core)
    if retraction is None:
        raise CoreError("no ec-retraction onto the computed core")
    return CoreResult(core=core, retraction=retraction, subgraph=core)


def canonical_switching(g: SignedGraph) -> tuple[SignedGraph, tuple[str, ...]]:
    """
    The switching of g minimising (number of negative edges, edge list).

    Edge lists compare as (index, index, sign) tuples with + before -; ties go
    to the smaller switch set, enumerated by size then lexicographically.
    """

    def key(h: SignedGraph) -> tuple:
        edges = tuple((h.index[e.u], h.index[e.v], e.sign.is_negative) for e in h.edges)
        return (len(h.negative_edges), edges)

    best, best_set = g, ()
    best_key = key(g)
    for size in range(1, g.order + 1):
        for xs in combinations(g.vertices, size):
            candidate = switch(g, xs)
            k = key(candidate)
            if k < best_key:
                best, best_set, best_key = candidate, xs, k
    return best, best_set


def s_core(g: SignedGraph) -> CoreResult:
    """The s-core of g in its canonical switching, with an s-retraction onto it."""
    subgraph = _shrink(g, s_hom)
    retraction = s_retract(g, subgraph.vertices)
    if retraction is None:
        raise CoreError("no s-retraction onto the computed core")
    core, core_switch = canonical_switching(subgraph)
    logger.debug("s-core has %d vertices and %d edges", core.order, core.size)
    return CoreResult(
        core=core, retraction=retraction, subgraph=subgraph, core_switch=core_switch
    )


# -----------------------------------------------------------------------------
# Core tests
# -----------------------------------------------------------------------------


def is_ec_core(g: SignedGraph) -> bool:
    return all(ec_hom(g, g.remove_vertex(v)) is None for v in g.vertices)


def pruned_switching_graph(g: SignedGraph) -> SignedGraph:
    """
    P(g) without v.1 for every vertex v whose two copies have identical signed
    neighbourhoods (copies included), i.e. switching at v changes nothing.
    """
    paired = switching_graph(g)
    p = paired.graph
    drop: list[str] = []
    for v in g.vertices:
        zero, one = (p.index[paired.copy(v, bit)] for bit in (0, 1))
        if all(
            np.array_equal(p.adjacency(sign)[zero], p.adjacency(sign)[one])
            for sign in Sign
        ):
            drop.append(paired.copy(v, 1))
    return p.induced(x for x in p.vertices if x not in drop)


def is_s_core(g: SignedGraph, *, cross_check: bool = False) -> bool:
    """
    True iff every s-endomorphism of g is onto.

    With `cross_check`, also test whether the pruned switching graph is an
    ec-core and raise CoreError if the two answers differ.
    """
    direct = all(s_hom(g, g.remove_vertex(v)) is None for v in g.vertices)
    if cross_check:
        paired = is_ec_core(pruned_switching_graph(g))
        if paired != direct:
            raise CoreError(f"s-core test disagrees: direct={direct}, paired={paired}")
    return direct
