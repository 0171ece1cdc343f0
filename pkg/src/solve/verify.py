"""
Independent witness checkers.

These re-check returned witnesses straight from the edge lists; they do not
use the search, the switching graph or the switching module.
"""

from src.models.witnesses import ColouringWitness, HomKind, HomWitness
from src.sgraph.graph import Sign, SignedGraph


def _signed_pairs(h: SignedGraph) -> set[tuple[frozenset[str], Sign]]:
    return {(frozenset((e.u, e.v)), e.sign) for e in h.edges}


def _total(g: SignedGraph, h: SignedGraph, mapping: dict[str, str]) -> bool:
    return set(mapping) == set(g.vertices) and all(a in h.vertices for a in mapping.values())


def _edge_map_ok(
    g: SignedGraph, h: SignedGraph, witness: HomWitness, flipped: set[str]
) -> bool:
    if witness.edge_map is None:
        return True
    labels = {e.label(): e for e in h.edges}
    for e in g.edges:
        target = labels.get(witness.edge_map.get(e.label(), ""))
        if target is None:
            return False
        sign = e.sign
        if e.u != e.v and ((e.u in flipped) != (e.v in flipped)):
            sign = Sign.NEGATIVE if sign is Sign.POSITIVE else Sign.POSITIVE
        ends = frozenset((witness.mapping[e.u], witness.mapping[e.v]))
        if frozenset((target.u, target.v)) != ends or target.sign is not sign:
            return False
    return True


def check_ec_witness(g: SignedGraph, h: SignedGraph, witness: HomWitness) -> bool:
    """Every edge of g lands on an edge of h with the same sign."""
    mapping = witness.mapping
    if not _total(g, h, mapping):
        return False
    pairs = _signed_pairs(h)
    for e in g.edges:
        if (frozenset((mapping[e.u], mapping[e.v])), e.sign) not in pairs:
            return False
    return _edge_map_ok(g, h, witness, set())


def check_plain_witness(g: SignedGraph, h: SignedGraph, witness: HomWitness) -> bool:
    """Adjacency (and loops) are preserved; signs are ignored."""
    mapping = witness.mapping
    if not _total(g, h, mapping):
        return False
    pairs = {frozenset((e.u, e.v)) for e in h.edges}
    return all(frozenset((mapping[e.u], mapping[e.v])) in pairs for e in g.edges)


def check_s_witness(g: SignedGraph, h: SignedGraph, witness: HomWitness) -> bool:
    """After switching g at the witness's switch set, the map preserves signs."""
    if witness.kind is not HomKind.S or witness.switch_set is None:
        return False
    mapping = witness.mapping
    if not _total(g, h, mapping):
        return False
    flipped = set(witness.switch_set)
    if not flipped <= set(g.vertices):
        return False
    pairs = _signed_pairs(h)
    for e in g.edges:
        sign = e.sign
        if e.u != e.v and ((e.u in flipped) != (e.v in flipped)):
            sign = Sign.NEGATIVE if sign is Sign.POSITIVE else Sign.POSITIVE
        if (frozenset((mapping[e.u], mapping[e.v])), sign) not in pairs:
            return False
    return _edge_map_ok(g, h, witness, flipped)


def check_colouring(g: SignedGraph, witness: ColouringWitness) -> bool:
    """phi(u) * sigma(e) != phi(v) on every edge, colours within range."""
    colours = witness.colours
    if set(colours) != set(g.vertices):
        return False
    for c in colours.values():
        if abs(c) > witness.k or (witness.zero_free and c == 0):
            return False
    for e in g.edges:
        factor = 1 if e.sign is Sign.POSITIVE else -1
        if colours[e.u] * factor == colours[e.v]:
            return False
    return True
