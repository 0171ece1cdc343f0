"""
Deciders for targets whose s-core has at most two edges.

Each decider answers "does g map to the core?" without search and returns the
certificate it found: a switching and a bipartition when accepting, the
offending loop, digon or cycle when rejecting.
"""

import logging

from src.models.classification import PolyCase, PolyDecision
from src.sgraph.bipartite import NonBipartite, two_colour
from src.sgraph.graph import Sign, SignedGraph
from src.switching.equivalence import equivalent, is_balanced

logger = logging.getLogger(__name__)


def _reject(case: PolyCase, reason: str, obstruction: tuple[str, ...]) -> PolyDecision:
    logger.debug("%s rejects: %s %s", case.value, reason, " ".join(obstruction))
    return PolyDecision(case=case, accepted=False, reason=reason, obstruction=obstruction)


def _side(g: SignedGraph) -> tuple[str, ...] | NonBipartite:
    try:
        colour = two_colour(g)
    except NonBipartite as exc:
        return exc
    return tuple(v for v in g.vertices if colour[v] == 0)


def _negative_loop_only(g: SignedGraph) -> PolyDecision:
    case = PolyCase.SINGLE_NEGATIVE_LOOP
    if g.digons:
        return _reject(case, "digon", g.digons[0])
    for e in g.loops:
        if e.sign is Sign.POSITIVE:
            return _reject(case, "positive loop", (e.u,))
    cert = equivalent(g, g.all_negative())
    if not cert.is_cut:
        return _reject(case, "positive cycle", cert.cycle)
    return PolyDecision(
        case=case, accepted=True, reason="switches to all-negative", switch_set=cert.switch_set
    )


def _positive_loop_only(g: SignedGraph) -> PolyDecision:
    case = PolyCase.SINGLE_POSITIVE_LOOP
    balanced, cert = is_balanced(g)
    if not balanced:
        return _reject(case, "negative cycle", cert.cycle)
    return PolyDecision(case=case, accepted=True, reason="balanced", switch_set=cert.switch_set)


def _bipartite(g: SignedGraph, case: PolyCase) -> PolyDecision | tuple[str, ...]:
    side = _side(g)
    if isinstance(side, NonBipartite):
        reason = "loop" if len(side.cycle) == 1 else "odd cycle"
        return _reject(case, reason, side.cycle)
    return side


def _single_edge(g: SignedGraph) -> PolyDecision:
    case = PolyCase.SINGLE_EDGE
    side = _bipartite(g, case)
    if isinstance(side, PolyDecision):
        return side
    balanced, cert = is_balanced(g)
    if not balanced:
        return _reject(case, "negative cycle", cert.cycle)
    return PolyDecision(
        case=case,
        accepted=True,
        reason="balanced and bipartite",
        switch_set=cert.switch_set,
        side=side,
    )


def _negative_digon(g: SignedGraph) -> PolyDecision:
    case = PolyCase.NEGATIVE_DIGON
    side = _bipartite(g, case)
    if isinstance(side, PolyDecision):
        return side
    return PolyDecision(case=case, accepted=True, reason="bipartite", side=side)


def _edgeless(g: SignedGraph) -> PolyDecision:
    case = PolyCase.EDGELESS
    if g.edges:
        e = g.edges[0]
        return _reject(case, "edge", (e.u,) if e.is_loop else (e.u, e.v))
    return PolyDecision(case=case, accepted=True, reason="no edges")


def decide_poly(case: PolyCase, g: SignedGraph) -> PolyDecision:
    """
    Decide whether g maps to the two-edge core named by `case`.

    BothLoops always accepts. SingleNegativeLoop accepts iff g switches to
    all-negative (so no digon and no positive loop). SinglePositiveLoop accepts
    iff g is balanced. SingleEdge needs a loop-free, bipartite and balanced g,
    NegativeDigon a loop-free bipartite g, and Edgeless a g with no edges.
    """
    case = PolyCase(case)
    if case is PolyCase.BOTH_LOOPS:
        return PolyDecision(case=case, accepted=True, reason="every graph maps")
    deciders = {
        PolyCase.SINGLE_NEGATIVE_LOOP: _negative_loop_only,
        PolyCase.SINGLE_POSITIVE_LOOP: _positive_loop_only,
        PolyCase.SINGLE_EDGE: _single_edge,
        PolyCase.NEGATIVE_DIGON: _negative_digon,
        PolyCase.EDGELESS: _edgeless,
    }
    return deciders[case](g)


def poly_target(case: PolyCase) -> SignedGraph:
    """The s-core each case decides against."""
    pos, neg = Sign.POSITIVE, Sign.NEGATIVE
    case = PolyCase(case)
    if case is PolyCase.BOTH_LOOPS:
        return SignedGraph(("a",), (("a", "a", pos), ("a", "a", neg)))
    if case is PolyCase.SINGLE_NEGATIVE_LOOP:
        return SignedGraph(("a",), (("a", "a", neg),))
    if case is PolyCase.SINGLE_POSITIVE_LOOP:
        return SignedGraph(("a",), (("a", "a", pos),))
    if case is PolyCase.SINGLE_EDGE:
        return SignedGraph(("a", "b"), (("a", "b", pos),))
    if case is PolyCase.NEGATIVE_DIGON:
        return SignedGraph(("a", "b"), (("a", "b", pos), ("a", "b", neg)))
    return SignedGraph(("a",))
