"""
Brute-force baselines.

Nothing here prunes or shares code with the solvers: maps are enumerated in
full (vectorised with numpy) and switchings are applied literally.
"""

import logging
from collections.abc import Mapping
from itertools import combinations

import numpy as np

from config.settings import get_oracle_settings
from src.sgraph.graph import Sign, SignedGraph

logger = logging.getLogger(__name__)


class SizeBound(Exception):
    """An input exceeds the configured oracle size bounds."""

    pass


def check_bounds(g: SignedGraph, h: SignedGraph | None = None) -> None:
    settings = get_oracle_settings()
    if g.order > settings.max_source_vertices:
        raise SizeBound(f"source has {g.order} > {settings.max_source_vertices} vertices")
    if h is not None and h.order > settings.max_target_vertices:
        raise SizeBound(f"target has {h.order} > {settings.max_target_vertices} vertices")


def within_bounds(g: SignedGraph, h: SignedGraph | None = None) -> bool:
    try:
        check_bounds(g, h)
    except SizeBound as exc:
        logger.warning("Oracle cross-check skipped: %s", exc)
        return False
    return True


def _sign_bit(sign: Sign) -> int:
    return 1 if sign is Sign.NEGATIVE else 0


def _target_tensor(h: SignedGraph) -> np.ndarray:
    """T[a, b, s]: h has an edge ab of sign s (0 positive, 1 negative)."""
    t = np.zeros((h.order, h.order, 2), dtype=bool)
    where = {v: i for i, v in enumerate(h.vertices)}
    for e in h.edges:
        a, b = where[e.u], where[e.v]
        t[a, b, _sign_bit(e.sign)] = t[b, a, _sign_bit(e.sign)] = True
    return t


def _all_maps(n: int, m: int) -> np.ndarray:
    """Every map from n source vertices to m target vertices, one per row."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    return np.indices((m,) * n, dtype=np.int16).reshape(n, -1).T


def _source_edges(g: SignedGraph) -> list[tuple[int, int, int]]:
    where = {v: i for i, v in enumerate(g.vertices)}
    return [(where[e.u], where[e.v], _sign_bit(e.sign)) for e in g.edges]


def _maps_preserving(
    maps: np.ndarray, tensor: np.ndarray, edges: list[tuple[int, int, int]], flips: np.ndarray
) -> np.ndarray:
    ok = np.ones(len(maps), dtype=bool)
    for u, v, bit in edges:
        sign = bit ^ int(flips[u] != flips[v]) if u != v else bit
        ok &= tensor[maps[:, u], maps[:, v], sign]
        if not ok.any():
            break
    return ok


def bf_s_hom(g: SignedGraph, h: SignedGraph) -> bool:
    """Literal check: some switch set and some vertex map make every edge land on its sign."""
    check_bounds(g, h)
    if g.order == 0:
        return True
    if h.order == 0:
        return False
    maps = _all_maps(g.order, h.order)
    tensor = _target_tensor(h)
    edges = _source_edges(g)
    for mask in range(2 ** g.order):
        flips = np.array([(mask >> i) & 1 for i in range(g.order)], dtype=np.int64)
        if _maps_preserving(maps, tensor, edges, flips).any():
            return True
    return False


def bf_ec_hom(
    g: SignedGraph, h: SignedGraph, fixed: Mapping[str, str] | None = None
) -> dict[str, str] | None:
    """First edge-colour-preserving map (in enumeration order), honouring fixed images."""
    check_bounds(g, h)
    if g.order == 0:
        return {}
    if h.order == 0:
        return None
    maps = _all_maps(g.order, h.order)
    if fixed:
        where_g = {v: i for i, v in enumerate(g.vertices)}
        where_h = {v: i for i, v in enumerate(h.vertices)}
        keep = np.ones(len(maps), dtype=bool)
        for v, a in fixed.items():
            keep &= maps[:, where_g[v]] == where_h[a]
        maps = maps[keep]
    ok = _maps_preserving(
        maps, _target_tensor(h), _source_edges(g), np.zeros(g.order, dtype=np.int64)
    )
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    row = maps[hits[0]]
    return {v: h.vertices[int(a)] for v, a in zip(g.vertices, row)}


def bf_plain_hom(
    g: SignedGraph, h: SignedGraph, fixed: Mapping[str, str] | None = None
) -> dict[str, str] | None:
    """Homomorphism of the underlying graphs, by giving every edge a positive sign."""
    return bf_ec_hom(_flatten(g), _flatten(h), fixed)


def _flatten(g: SignedGraph) -> SignedGraph:
    pairs = {frozenset((e.u, e.v)): (e.u, e.v, Sign.POSITIVE) for e in g.edges}
    return SignedGraph(g.vertices, tuple(pairs.values()))


def _signed_pairs(g: SignedGraph) -> set[tuple[frozenset[str], Sign]]:
    return {(frozenset((e.u, e.v)), e.sign) for e in g.edges}


def bf_equivalent(g: SignedGraph, other: SignedGraph) -> bool:
    """Try every switch set."""
    settings = get_oracle_settings()
    if g.order > settings.max_equivalence_vertices:
        raise SizeBound(f"{g.order} > {settings.max_equivalence_vertices} vertices")
    goal = _signed_pairs(other)
    if set(g.vertices) != set(other.vertices) or len(goal) != len(g.edges):
        return False
    for size in range(g.order + 1):
        for xs in combinations(g.vertices, size):
            flipped = set(xs)
            pairs = set()
            for e in g.edges:
                sign = e.sign
                if e.u != e.v and ((e.u in flipped) != (e.v in flipped)):
                    sign = Sign.POSITIVE if sign is Sign.NEGATIVE else Sign.NEGATIVE
                pairs.add((frozenset((e.u, e.v)), sign))
            if pairs == goal:
                return True
    return False


def bf_colouring(g: SignedGraph, k: int, zero_free: bool = False) -> dict[str, int] | None:
    """Enumerate colour assignments until phi(u) * sigma(e) != phi(v) holds on every edge."""
    check_bounds(g)
    palette = np.array([c for c in range(-k, k + 1) if not (zero_free and c == 0)])
    if g.order == 0:
        return {}
    rows = palette[_all_maps(g.order, len(palette))]
    ok = np.ones(len(rows), dtype=bool)
    where = {v: i for i, v in enumerate(g.vertices)}
    for e in g.edges:
        factor = 1 if e.sign is Sign.POSITIVE else -1
        ok &= rows[:, where[e.u]] * factor != rows[:, where[e.v]]
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    return {v: int(c) for v, c in zip(g.vertices, rows[hits[0]])}
