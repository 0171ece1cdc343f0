"""
Generated signed graphs for property tests.

The exhaustive part lists every signed graph on up to n vertices once per
isomorphism class: each underlying shape comes from the networkx graph atlas,
and signatures are enumerated one orbit at a time under the shape's
automorphisms. The random part is reproducible from the configured seed.
"""

import logging
from collections.abc import Iterator
from itertools import combinations, product

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from config.settings import CorpusConfig, get_corpus_config
from src.sgraph.graph import Edge, Sign, SignedGraph

logger = logging.getLogger(__name__)

NAMES = "abcdefg"
ATLAS_MAX_VERTICES = 7

# States of a vertex pair and of a vertex: absent, +, -, both
STATES = (
    (),
    (Sign.POSITIVE,),
    (Sign.NEGATIVE,),
    (Sign.POSITIVE, Sign.NEGATIVE),
)


def _build(
    n: int, pairs: list[tuple[int, int]], loops: tuple[int, ...], states: tuple[int, ...]
) -> SignedGraph:
    names = tuple(NAMES[:n])
    edges: list[Edge] = []
    for v, state in zip(names, loops):
        edges.extend(Edge(v, v, s) for s in STATES[state])
    for (i, j), state in zip(pairs, states):
        edges.extend(Edge(names[i], names[j], s) for s in STATES[state])
    return SignedGraph(names, tuple(edges))


def _shapes(n: int, connected: bool) -> list[nx.Graph]:
    return [
        a
        for a in nx.graph_atlas_g()
        if a.number_of_nodes() == n and (not connected or nx.is_connected(a))
    ]


def _signatures(shape: nx.Graph) -> Iterator[SignedGraph]:
    """One signed graph per orbit of loop and edge states under Aut(shape)."""
    n = shape.number_of_nodes()
    pairs = sorted(tuple(sorted(e)) for e in shape.edges)
    index = {p: t for t, p in enumerate(pairs)}
    automorphisms = [
        (tuple(m[v] for v in range(n)), [index[tuple(sorted((m[i], m[j])))] for i, j in pairs])
        for m in GraphMatcher(shape, shape).isomorphisms_iter()
    ]
    seen: set[tuple] = set()
    for loops in product(range(4), repeat=n):
        for states in product(range(1, 4), repeat=len(pairs)):
            if (loops, states) in seen:
                continue
            for vertex_map, pair_map in automorphisms:
                new_loops = [0] * n
                for v, state in zip(vertex_map, loops):
                    new_loops[v] = state
                new_states = [0] * len(pairs)
                for t, state in zip(pair_map, states):
                    new_states[t] = state
                seen.add((tuple(new_loops), tuple(new_states)))
            yield _build(n, pairs, loops, states)


def exhaustive_graphs(
    max_vertices: int | None = None, connected: bool = True
) -> Iterator[SignedGraph]:
    """Every signed graph on 1..max_vertices vertices, one per isomorphism class."""
    if max_vertices is None:
        max_vertices = get_corpus_config().exhaustive_max_vertices
    if max_vertices > ATLAS_MAX_VERTICES:
        raise ValueError(f"the graph atlas stops at {ATLAS_MAX_VERTICES} vertices")
    for n in range(1, max_vertices + 1):
        count = 0
        for shape in _shapes(n, connected):
            for g in _signatures(shape):
                count += 1
                yield g
        logger.debug("%d classes on %d vertices", count, n)


# -----------------------------------------------------------------------------
# Seeded random graphs
# -----------------------------------------------------------------------------


def _random_sign(rng: np.random.Generator) -> Sign:
    return Sign.NEGATIVE if rng.random() < 0.5 else Sign.POSITIVE


def random_graph(
    n: int, rng: np.random.Generator, config: CorpusConfig | None = None
) -> SignedGraph:
    """A connected signed graph: a random spanning tree plus random extra edges."""
    config = config or get_corpus_config()
    names = tuple(f"v{i}" for i in range(n))
    pairs: set[tuple[int, int]] = set()
    for i in range(1, n):
        pairs.add((int(rng.integers(0, i)), i))
    for i, j in combinations(range(n), 2):
        if rng.random() < config.edge_probability:
            pairs.add((i, j))

    edges: list[Edge] = []
    for i, j in sorted(pairs):
        if rng.random() < config.digon_probability:
            edges.append(Edge(names[i], names[j], Sign.POSITIVE))
            edges.append(Edge(names[i], names[j], Sign.NEGATIVE))
        else:
            edges.append(Edge(names[i], names[j], _random_sign(rng)))
    for v in names:
        if rng.random() < config.loop_probability:
            edges.append(Edge(v, v, _random_sign(rng)))
    return SignedGraph(names, tuple(edges))


def random_graphs(
    count: int | None = None,
    min_vertices: int | None = None,
    max_vertices: int | None = None,
    seed: int | None = None,
) -> list[SignedGraph]:
    config = get_corpus_config()
    rng = np.random.default_rng(config.seed if seed is None else seed)
    count = config.random_count if count is None else count
    low = config.random_min_vertices if min_vertices is None else min_vertices
    high = config.random_max_vertices if max_vertices is None else max_vertices
    return [random_graph(int(rng.integers(low, high + 1)), rng, config) for _ in range(count)]


def random_pairs(
    count: int | None = None,
    source_max: int | None = None,
    target_max: int | None = None,
    seed: int | None = None,
) -> list[tuple[SignedGraph, SignedGraph]]:
    """(g, h) instance pairs with 1..source_max and 1..target_max vertices."""
    config = get_corpus_config()
    rng = np.random.default_rng((config.seed if seed is None else seed) + 1)
    count = config.pair_count if count is None else count
    source_max = config.pair_source_max if source_max is None else source_max
    target_max = config.pair_target_max if target_max is None else target_max
    pairs = []
    for _ in range(count):
        g = random_graph(int(rng.integers(1, source_max + 1)), rng, config)
        h = random_graph(int(rng.integers(1, target_max + 1)), rng, config)
        pairs.append((g, h))
    return pairs


def resign(g: SignedGraph, rng: np.random.Generator) -> SignedGraph:
    """Random signature on the same underlying graph; digons and both-loop vertices stay."""
    candidates = [*g.adjacent_pairs, *((e.u, e.u) for e in g.loops)]
    return g.with_signature(p for p in candidates if rng.random() < 0.5)
