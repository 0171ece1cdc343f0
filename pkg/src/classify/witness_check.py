"""
Re-check a classification from the core and the witness alone.

Switching graphs and indicator results are recomputed here straight from the
core's edge list: (u.a, v.b) carries sign s iff the core has uv with sign s
when a == b and -s when a != b; a loop of sign s at u gives loops of sign s at
both copies and the edge u.0 u.1 of sign -s.
"""

import logging
from collections.abc import Sequence
from itertools import product

from config.settings import Limits
from src.models.classification import Classification, HardCase, VerdictKind
from src.sgraph.graph import Sign, SignedGraph

logger = logging.getLogger(__name__)

SignTable = dict[frozenset[str], set[Sign]]


def _table(core: SignedGraph, switch_set: Sequence[str] = ()) -> SignTable:
    xs = set(switch_set)
    table: SignTable = {}
    for e in core.edges:
        sign = e.sign
        if e.u != e.v and ((e.u in xs) != (e.v in xs)):
            sign = -sign
        table.setdefault(frozenset((e.u, e.v)), set()).add(sign)
    return table


def _split(name: str) -> tuple[str, int]:
    vertex, bit = name.rsplit(Limits.COPY_SEPARATOR, 1)
    return vertex, int(bit)


def _paired_edge(table: SignTable, x: str, y: str, sign: Sign) -> bool:
    (u, a), (v, b) = _split(x), _split(y)
    signs = table.get(frozenset((u, v)), set())
    if u == v and a != b:
        return -sign in signs
    return (sign if a == b else -sign) in signs


def _names(core: SignedGraph) -> list[str]:
    return [f"{v}{Limits.COPY_SEPARATOR}{bit}" for bit in (0, 1) for v in core.vertices]


def square_relation(core: SignedGraph, switch_set: Sequence[str] = ()) -> set[frozenset[str]]:
    """
    Edges of the alternating-square indicator result on P(core switched).

    x ~ y iff x -+- c -(-)- y and y -+- c' -(-)- x for some c, c'.
    """
    table = _table(core, switch_set)
    names = _names(core)
    pos = Sign.POSITIVE
    neg = Sign.NEGATIVE

    def half(x: str, y: str) -> bool:
        return any(
            _paired_edge(table, x, c, pos) and _paired_edge(table, c, y, neg) for c in names
        )

    return {
        frozenset((x, y)) for x in names for y in names if half(x, y) and half(y, x)
    }


def digon_relation(core: SignedGraph) -> set[frozenset[str]]:
    """Edges of the five-vertex digon indicator result on P(core), by brute force."""
    table = _table(core)
    names = _names(core)
    pos, neg = Sign.POSITIVE, Sign.NEGATIVE
    # Vertices i, x, y, j, c in that order
    pattern = [
        (1, 2, pos), (1, 2, neg), (0, 3, pos), (4, 4, pos),
        (0, 4, neg), (4, 1, neg), (1, 0, neg),
        (3, 4, neg), (4, 2, neg), (2, 3, neg),
    ]
    edges: set[frozenset[str]] = set()
    for image in product(names, repeat=5):
        if all(_paired_edge(table, image[a], image[b], s) for a, b, s in pattern):
            edges.add(frozenset((image[0], image[3])))
    return edges


def _odd_simple_cycle(cycle: Sequence[str]) -> bool:
    return len(cycle) >= 3 and len(cycle) % 2 == 1 and len(set(cycle)) == len(cycle)


def _steps(cycle: Sequence[str]) -> list[tuple[str, str]]:
    return list(zip(cycle, [*cycle[1:], cycle[0]]))


def _loop_free(relation: set[frozenset[str]]) -> bool:
    return all(len(pair) == 2 for pair in relation)


def _result_matches(result: SignedGraph | None, relation: set[frozenset[str]]) -> bool:
    if result is None:
        return True
    return {frozenset((e.u, e.v)) for e in result.edges} == relation


def _shape_has_all_three(core: SignedGraph) -> bool:
    return (
        core.has_digon
        and core.has_loop(Sign.POSITIVE)
        and core.has_loop(Sign.NEGATIVE)
    )


def _check_monochromatic(core: SignedGraph, c: Classification) -> bool:
    w = c.witness
    if w.cycle_sign is None or core.has_loop(w.cycle_sign):
        return False
    table = _table(core)
    return _odd_simple_cycle(w.cycle) and all(
        _paired_edge(table, x, y, w.cycle_sign) for x, y in _steps(w.cycle)
    )


def _check_relation_cycle(relation: set[frozenset[str]], cycle: Sequence[str]) -> bool:
    return (
        _loop_free(relation)
        and _odd_simple_cycle(cycle)
        and all(frozenset(step) in relation for step in _steps(cycle))
    )


def _negative_even_walk(core: SignedGraph, walk: Sequence[str] | None) -> bool:
    if not walk or len(walk) < 4 or len(walk) % 2 or len(set(walk)) != len(walk):
        return False
    table = _table(core)
    signs = [table.get(frozenset(step), set()) for step in _steps(walk)]
    if any(len(s) != 1 for s in signs):
        return False
    negatives = sum(Sign.NEGATIVE in s for s in signs)
    return negatives % 2 == 1


def hardness_witness_check(h: SignedGraph, c: Classification) -> bool:
    """Independently confirm the structural claims behind a classification of h."""
    core = c.s_core
    if core.order > h.order or core.size > h.size:
        return False

    if c.verdict is VerdictKind.POLYNOMIAL:
        return core.size <= 2
    if c.verdict is VerdictKind.CONJECTURED_NP_COMPLETE:
        return _shape_has_all_three(core) and core.order > 2
    if c.witness is None or c.witness.case is not c.hard_case:
        return False

    w = c.witness
    if w.case is HardCase.DIGON:
        return core.has_digon and _check_monochromatic(core, c)
    if w.case is HardCase.ODD_CYCLE_WITHOUT_LOOP:
        return not core.has_digon and _check_monochromatic(core, c)
    if w.case is HardCase.NEGATIVE_EVEN_CYCLE:
        relation = square_relation(core, w.switch_set)
        return (
            _negative_even_walk(core, w.source_walk)
            and _result_matches(w.indicator_result, relation)
            and _check_relation_cycle(relation, w.cycle)
        )
    if w.case is HardCase.LOOPS_OF_BOTH_SIGNS:
        relation = square_relation(core, w.switch_set)
        return (
            core.has_loop(Sign.POSITIVE)
            and core.has_loop(Sign.NEGATIVE)
            and _result_matches(w.indicator_result, relation)
            and _check_relation_cycle(relation, w.cycle)
        )
    if w.case is HardCase.DIGON_WITH_BOTH_LOOPS:
        relation = digon_relation(core)
        if w.plain_core is not None and not all(
            frozenset((e.u, e.v)) in relation for e in w.plain_core.edges
        ):
            return False
        return (
            core.order == 2
            and _shape_has_all_three(core)
            and _result_matches(w.indicator_result, relation)
            and _check_relation_cycle(relation, w.cycle)
        )
    logger.warning("Unknown hardness case %s", w.case)
    return False
