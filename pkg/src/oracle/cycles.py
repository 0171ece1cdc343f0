"""
Cycle enumeration and the cycle-sign form of s-homomorphism.

A vertex map with a choice of image edge for every source edge comes from an
s-homomorphism exactly when every cycle keeps its sign. Writing d(e) = 1 when
e and its image edge differ in sign, each cycle asks for an even number of
d(e) = 1 along it. Image pairs carrying both signs leave d(e) free, so the
question for a fixed vertex map is a linear system over GF(2).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import networkx as nx
import numpy as np

from config.settings import get_oracle_settings
from src.oracle.brute import SizeBound, check_bounds
from src.sgraph.graph import Edge, Sign, SignedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedCycle:
    """A simple cycle as its vertices and the edge used at each step."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def sign(self) -> Sign:
        return Sign.product(e.sign for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def enumerate_cycles(g: SignedGraph) -> list[SignedCycle]:
    """
    All simple cycles: loops, digons, and every cycle of length >= 3 once for
    each choice of parallel edge at its digon steps.
    """
    limit = get_oracle_settings().max_cycle_vertices
    if g.order > limit:
        raise SizeBound(f"{g.order} > {limit} vertices")

    by_pair: dict[frozenset[str], list[Edge]] = {}
    for e in g.edges:
        by_pair.setdefault(frozenset((e.u, e.v)), []).append(e)

    cycles = [SignedCycle((e.u,), (e,)) for e in g.edges if e.is_loop]
    for pair, edges in by_pair.items():
        if len(pair) == 2 and len(edges) == 2:
            u, v = edges[0].u, edges[0].v
            cycles.append(SignedCycle((u, v), tuple(edges)))

    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(tuple(pair) for pair in by_pair if len(pair) == 2)
    for cycle in nx.simple_cycles(simple):
        if len(cycle) < 3:
            continue
        steps = list(zip(cycle, [*cycle[1:], cycle[0]]))
        options = [by_pair[frozenset(step)] for step in steps]
        for choice in product(*options):
            cycles.append(SignedCycle(tuple(cycle), tuple(choice)))
    return cycles


def _solvable(rows: tuple[tuple[int, ...], ...], rhs: tuple[int, ...]) -> bool:
    """Gaussian elimination over GF(2)."""
    if not rows:
        return True
    a = np.array(rows, dtype=np.uint8) if rows[0] else np.zeros((len(rows), 0), dtype=np.uint8)
    b = np.array(rhs, dtype=np.uint8)
    pivot_row = 0
    for col in range(a.shape[1]):
        hits = np.flatnonzero(a[pivot_row:, col]) + pivot_row
        if not len(hits):
            continue
        p = hits[0]
        a[[pivot_row, p]] = a[[p, pivot_row]]
        b[[pivot_row, p]] = b[[p, pivot_row]]
        below = np.flatnonzero(a[:, col])
        for r in below:
            if r != pivot_row:
                a[r] ^= a[pivot_row]
                b[r] ^= b[pivot_row]
        pivot_row += 1
        if pivot_row == a.shape[0]:
            break
    return not np.any(b[pivot_row:])


def bf_s_hom_via_cycles(g: SignedGraph, h: SignedGraph) -> bool:
    """
    Decide g -> h by enumerating vertex maps and asking whether image edges can
    be chosen so that every cycle of g keeps its sign.
    """
    check_bounds(g, h)
    if g.order == 0:
        return True
    if h.order == 0:
        return False

    cycles = enumerate_cycles(g)
    edge_index = {e: t for t, e in enumerate(g.edges)}
    cycle_rows = [[edge_index[e] for e in c.edges] for c in cycles]

    target: dict[frozenset[str], set[Sign]] = {}
    for e in h.edges:
        target.setdefault(frozenset((e.u, e.v)), set()).add(e.sign)

    @lru_cache(maxsize=None)
    def consistent(pattern: tuple[int, ...]) -> bool:
        # pattern[t]: 0 or 1 = forced d(e_t), 2 = free
        free = [t for t, p in enumerate(pattern) if p == 2]
        column = {t: c for c, t in enumerate(free)}
        rows, rhs = [], []
        for row in cycle_rows:
            coeffs = [0] * len(free)
            parity = 0
            for t in row:
                if pattern[t] == 2:
                    coeffs[column[t]] ^= 1
                else:
                    parity ^= pattern[t]
            rows.append(tuple(coeffs))
            rhs.append(parity)
        return _solvable(tuple(rows), tuple(rhs))

    for images in product(h.vertices, repeat=g.order):
        phi = dict(zip(g.vertices, images))
        pattern = []
        for e in g.edges:
            signs = target.get(frozenset((phi[e.u], phi[e.v])), set())
            if not signs:
                break
            if len(signs) == 2:
                pattern.append(2)
            else:
                (image_sign,) = signs
                pattern.append(int(image_sign is not e.sign))
        else:
            if consistent(tuple(pattern)):
                return True
    return False
