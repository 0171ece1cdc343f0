"""
Complexity classification of s-homomorphism problems.

The s-core of the target decides everything. Cores with at most two edges are
polynomial. Cores containing a negative digon together with loops of both
signs are outside the proven dichotomy; the two-vertex one is NP-complete
through the five-vertex digon indicator and the rest are reported as
conjectured. Every other core falls into one of four hardness arguments,
checked in order:

    a  negative digon: a monochromatic odd cycle in P(core) of a sign with no loop
    b  negative even cycle: an odd cycle in the indicator result on P(core)
    c  odd cycle of length >= 3 with no loop of its sign
    d  loops of both signs joined by a path: an odd cycle in the indicator result
"""

import logging
from collections.abc import Sequence

import networkx as nx

from src.construct.indicator import (
    alternating_square_indicator,
    digon_indicator,
    indicator_result,
)
from src.construct.switching_graph import copy_name, switching_graph
from src.cores.cores import ec_core, s_core
from src.models.classification import (
    Classification,
    HardCase,
    HardnessWitness,
    PolyCase,
    VerdictKind,
)
from src.sgraph.bipartite import NonBipartite, two_colour
from src.sgraph.graph import Sign, SignedGraph, SignedGraphError
from src.switching.equivalence import switch

logger = logging.getLogger(__name__)


class Disconnected(SignedGraphError):
    """The target is not connected."""

    pass


class ClassificationError(Exception):
    """The case analysis reached an impossible state."""

    pass


# -----------------------------------------------------------------------------
# Shapes
# -----------------------------------------------------------------------------


def in_restricted_family(h: SignedGraph) -> bool:
    """False iff h has a negative digon, a positive loop and a negative loop."""
    return not (h.has_digon and h.has_loop(Sign.POSITIVE) and h.has_loop(Sign.NEGATIVE))


def is_digon_with_both_loops(h: SignedGraph) -> bool:
    """Two vertices, a negative digon, a positive loop on one and a negative loop on the other."""
    if h.order != 2 or h.size != 4 or not h.has_digon:
        return False
    u, v = h.vertices
    return {h.loop_signs(u), h.loop_signs(v)} == {
        frozenset({Sign.POSITIVE}),
        frozenset({Sign.NEGATIVE}),
    }


def poly_case(core: SignedGraph) -> PolyCase:
    """Name the shape of a connected s-core with at most two edges."""
    if core.size == 0:
        return PolyCase.EDGELESS
    if core.order == 1:
        signs = core.loop_signs(core.vertices[0])
        if len(signs) == 2:
            return PolyCase.BOTH_LOOPS
        return (
            PolyCase.SINGLE_NEGATIVE_LOOP
            if Sign.NEGATIVE in signs
            else PolyCase.SINGLE_POSITIVE_LOOP
        )
    if core.order == 2 and not core.loops:
        return PolyCase.NEGATIVE_DIGON if core.has_digon else PolyCase.SINGLE_EDGE
    raise ClassificationError(f"no two-edge s-core looks like {core.edges}")


# -----------------------------------------------------------------------------
# Cycle search on the core
# -----------------------------------------------------------------------------


def _simple_graph(core: SignedGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(core.vertices)
    graph.add_edges_from(core.adjacent_pairs)
    return graph


def _cycle_sign(core: SignedGraph, cycle: Sequence[str]) -> Sign:
    signs = []
    for u, v in zip(cycle, [*cycle[1:], cycle[0]]):
        (sign,) = core.pair_signs(u, v)
        signs.append(sign)
    return Sign.product(signs)


def _cycle_key(core: SignedGraph, cycle: Sequence[str]) -> tuple:
    edges = sorted(
        tuple(sorted((core.index[u], core.index[v])))
        for u, v in zip(cycle, [*cycle[1:], cycle[0]])
    )
    return (len(cycle), tuple(edges))


def _cycles(core: SignedGraph) -> list[list[str]]:
    """Simple cycles of length >= 3 of a digon-free core, shortest first."""
    cycles = [c for c in nx.simple_cycles(_simple_graph(core)) if len(c) >= 3]
    return sorted(cycles, key=lambda c: _cycle_key(core, c))


def _switch_along(core: SignedGraph, walk: Sequence[str], sign: Sign) -> tuple[str, ...]:
    """Switch set making every step of the walk (except a closing one) carry `sign`."""
    flipped = {walk[0]: False}
    for u, v in zip(walk, walk[1:]):
        (current,) = core.pair_signs(u, v)
        flipped[v] = flipped[u] != (current is not sign)
    return tuple(v for v in core.vertices if flipped.get(v, False))


def _orient_negative_cycle(core: SignedGraph, cycle: list[str]) -> list[str]:
    """
    Rotate so that the cycle runs v1 ... v2k with v2k v1 the lowest negative edge
    of the core on the cycle and v1 its higher-indexed endpoint.
    """
    n = len(cycle)
    steps = [(cycle[t], cycle[(t + 1) % n]) for t in range(n)]
    negative = [
        tuple(sorted(step, key=core.index.__getitem__))
        for step in steps
        if Sign.NEGATIVE in core.pair_signs(*step)
    ]
    low, high = min(negative, key=lambda p: (core.index[p[0]], core.index[p[1]]))
    start = cycle.index(high)
    forward = cycle[start:] + cycle[:start]
    if forward[1] == low:
        forward = [forward[0], *forward[1:][::-1]]
    return forward


# -----------------------------------------------------------------------------
# Hardness arguments
# -----------------------------------------------------------------------------


def _monochromatic_odd_cycle(core: SignedGraph) -> HardnessWitness | None:
    paired = switching_graph(core).graph
    for sign in (Sign.POSITIVE, Sign.NEGATIVE):
        if core.has_loop(sign):
            continue
        part = SignedGraph(
            paired.vertices,
            tuple(e for e in paired.edges if e.sign is sign and not e.is_loop),
        )
        try:
            two_colour(part)
        except NonBipartite as exc:
            return HardnessWitness(case=HardCase.DIGON, cycle=exc.cycle, cycle_sign=sign)
    return None


def _negative_even_cycle(core: SignedGraph) -> HardnessWitness | None:
    candidates = [
        c for c in _cycles(core) if len(c) % 2 == 0 and _cycle_sign(core, c) is Sign.NEGATIVE
    ]
    if not candidates:
        return None
    cycle = _orient_negative_cycle(core, candidates[0])
    switch_set = _switch_along(core, cycle, Sign.POSITIVE)
    result = indicator_result(
        alternating_square_indicator(), switching_graph(switch(core, switch_set)).graph
    )
    odd = [copy_name(cycle[0], 0)]
    for t in range(2, len(cycle) - 1, 2):
        odd.extend([copy_name(cycle[t], 1), copy_name(cycle[t], 0)])
    return HardnessWitness(
        case=HardCase.NEGATIVE_EVEN_CYCLE,
        cycle=tuple(odd),
        switch_set=switch_set,
        source_walk=tuple(cycle),
        indicator_result=result,
    )


def _odd_cycle_without_loop(core: SignedGraph) -> HardnessWitness | None:
    for cycle in _cycles(core):
        if len(cycle) % 2 == 0:
            continue
        sign = _cycle_sign(core, cycle)
        if core.has_loop(sign):
            continue
        switch_set = set(_switch_along(core, cycle, sign))
        lifted = tuple(copy_name(v, int(v in switch_set)) for v in cycle)
        return HardnessWitness(
            case=HardCase.ODD_CYCLE_WITHOUT_LOOP,
            cycle=lifted,
            cycle_sign=sign,
            switch_set=tuple(v for v in core.vertices if v in switch_set),
            source_walk=tuple(cycle),
        )
    return None


def loop_path_cycle(path: Sequence[str]) -> tuple[str, ...]:
    """
    Odd cycle in the indicator result on P(core) for a positive path
    r = v0, ..., vk = b, with a negative loop at r and a positive loop at b.

    It climbs v0.0, v2.1, v4.0, ... by steps of two, crosses between the copies
    at b (or just below it), descends on the odd indices and closes through the
    negative loop at r.
    """
    k = len(path) - 1
    if k < 1:
        raise ClassificationError("the loop path needs at least one edge")
    up = [(2 * t, t % 2) for t in range(k // 2 + 1)]
    top, bit = up[-1]
    if k % 2 == 0:
        cross = [(k, 1 - bit)]
        down_start, down_bit = k - 1, bit
    else:
        cross = [(k, 1 - bit), (k, bit)]
        down_start, down_bit = k - 2, 1 - bit
    down = []
    for t, i in enumerate(range(down_start, 0, -2)):
        down.append((i, down_bit ^ (t % 2)))
    if down and down[-1] == (1, 1):
        down.append((1, 0))
    return tuple(copy_name(path[i], b) for i, b in [*up, *cross, *down])


def _loops_of_both_signs(core: SignedGraph) -> HardnessWitness | None:
    reds = [e.u for e in core.loops if e.sign is Sign.NEGATIVE]
    blues = [e.u for e in core.loops if e.sign is Sign.POSITIVE]
    if not reds or not blues:
        return None
    graph = _simple_graph(core)
    paths = [nx.shortest_path(graph, r, b) for r in reds for b in blues]
    path = min(paths, key=lambda p: (len(p), [core.index[v] for v in p]))
    switch_set = _switch_along(core, path, Sign.POSITIVE)
    result = indicator_result(
        alternating_square_indicator(), switching_graph(switch(core, switch_set)).graph
    )
    return HardnessWitness(
        case=HardCase.LOOPS_OF_BOTH_SIGNS,
        cycle=loop_path_cycle(path),
        switch_set=switch_set,
        source_walk=tuple(path),
        indicator_result=result,
    )


def _digon_with_both_loops(core: SignedGraph) -> HardnessWitness:
    result = indicator_result(digon_indicator(), switching_graph(core).graph)
    plain = ec_core(result).core
    try:
        two_colour(plain)
    except NonBipartite as exc:
        return HardnessWitness(
            case=HardCase.DIGON_WITH_BOTH_LOOPS,
            cycle=exc.cycle,
            indicator_result=result,
            plain_core=plain,
        )
    raise ClassificationError("the digon indicator result is bipartite")


def _check_cycle_in(result: SignedGraph, cycle: Sequence[str]) -> None:
    for u, v in zip(cycle, [*cycle[1:], cycle[0]]):
        if not result.has_edge(u, v):
            raise ClassificationError(f"witness step {u} {v} missing from the indicator result")


# -----------------------------------------------------------------------------
# Classifier
# -----------------------------------------------------------------------------


def classify(h: SignedGraph) -> Classification:
    """
    Classify the s-homomorphism problem of a connected signed graph.

    Raises:
        Disconnected: if h is empty or disconnected
        ClassificationError: if no case applies
    """
    if not h.is_connected:
        raise Disconnected("the target must be connected")

    core = s_core(h).core
    logger.debug("s-core: %d vertices, %d edges", core.order, core.size)

    if core.size <= 2:
        case = poly_case(core)
        logger.debug("Polynomial case %s", case.value)
        return Classification(verdict=VerdictKind.POLYNOMIAL, poly_case=case, s_core=core)

    if not in_restricted_family(core):
        if is_digon_with_both_loops(core):
            witness = _digon_with_both_loops(core)
            return Classification(
                verdict=VerdictKind.NP_COMPLETE,
                hard_case=witness.case,
                s_core=core,
                witness=witness,
            )
        logger.debug("Core has a digon and loops of both signs")
        return Classification(verdict=VerdictKind.CONJECTURED_NP_COMPLETE, s_core=core)

    if core.has_digon:
        finders = [_monochromatic_odd_cycle]
    else:
        finders = [_negative_even_cycle, _odd_cycle_without_loop, _loops_of_both_signs]
    for find in finders:
        witness = find(core)
        if witness is None:
            continue
        if witness.indicator_result is not None:
            _check_cycle_in(witness.indicator_result, witness.cycle)
        logger.debug("Hardness case %s: %s", witness.case.value, " ".join(witness.cycle))
        return Classification(
            verdict=VerdictKind.NP_COMPLETE, hard_case=witness.case, s_core=core, witness=witness
        )
    raise ClassificationError(f"no hardness argument applies to a core with {core.size} edges")
