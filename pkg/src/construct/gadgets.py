"""
Gadget paths and the retraction reduction.

Paths are written as run words: R is a negative edge, B a positive one, and a
run such as B3 is three consecutive positive edges. For odd l the path P is
R (B3 R3 ... B3) R with l runs in total, and P_i shortens its i-th interior run
to length 1; its distinguished vertex is the rightmost one. For even k the path
Q is R (B3 R3 ... R3) B with k runs, Q_j shortens its j-th interior run, and its
distinguished vertex is the leftmost one.

Attaching P_i to the i-th vertex of one side of a bipartite graph h and Q_j to
the j-th vertex of the other side gives a signed target whose ec-retraction
problem encodes retraction to h.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from config.settings import Limits
from src.construct.errors import (
    DisconnectedInput,
    EmbeddingMismatch,
    IndexOutOfRange,
    InvalidRunWord,
    NotBipartite,
    ParityError,
)
from src.models.witnesses import HomWitness
from src.sgraph.bipartite import NonBipartite, two_colour
from src.sgraph.graph import Edge, Sign, SignedGraph, underlying

logger = logging.getLogger(__name__)

RUN_GLYPHS = {Sign.NEGATIVE: "R", Sign.POSITIVE: "B"}


class GadgetFamily(str, Enum):
    P = "P"
    P_I = "P_i"
    Q = "Q"
    Q_J = "Q_j"

    @property
    def is_p(self) -> bool:
        return self in (GadgetFamily.P, GadgetFamily.P_I)

    @property
    def indexed(self) -> bool:
        return self in (GadgetFamily.P_I, GadgetFamily.Q_J)


# -----------------------------------------------------------------------------
# Run words
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class RunWord:
    """Sequence of (sign, length) runs with alternating signs."""

    runs: tuple[tuple[Sign, int], ...]

    def __post_init__(self):
        for sign, length in self.runs:
            if length < 1:
                raise InvalidRunWord(f"run length must be positive, got {length}")
        for (a, _), (b, _) in zip(self.runs, self.runs[1:]):
            if a is b:
                raise InvalidRunWord("consecutive runs must alternate in sign")

    def signs(self) -> list[Sign]:
        """Edge signs from left to right."""
        return [sign for sign, length in self.runs for _ in range(length)]

    def __len__(self) -> int:
        return len(self.runs)

    def __str__(self) -> str:
        return " ".join(
            RUN_GLYPHS[s] + (str(n) if n > 1 else "") for s, n in self.runs
        )


def gadget_word(family: GadgetFamily, length: int, index: int | None = None) -> RunWord:
    """
    Run word of P, P_i (odd length l) or Q, Q_j (even length k).

    Raises:
        ParityError: l not odd >= 3, or k not even >= 2
        IndexOutOfRange: index outside 1..length-2, or given for P/Q
    """
    family = GadgetFamily(family)
    if family.is_p and (length < 3 or length % 2 == 0):
        raise ParityError(f"P paths need an odd length >= 3, got {length}")
    if not family.is_p and (length < 2 or length % 2 == 1):
        raise ParityError(f"Q paths need an even length >= 2, got {length}")
    if family.indexed:
        if index is None or not 1 <= index <= length - 2:
            raise IndexOutOfRange(f"{family.value} index must lie in 1..{length - 2}")
    elif index is not None:
        raise IndexOutOfRange(f"{family.value} takes no index")

    runs = [(Sign.NEGATIVE, 1)]
    for t in range(1, length - 1):
        sign = Sign.POSITIVE if t % 2 == 1 else Sign.NEGATIVE
        runs.append((sign, 1 if t == index else 3))
    runs.append((Sign.NEGATIVE if family.is_p else Sign.POSITIVE, 1))
    return RunWord(tuple(runs))


@dataclass(frozen=True)
class GadgetPath:
    """A gadget path with its distinguished vertex and that vertex's label."""

    graph: SignedGraph
    word: RunWord
    endpoint: str
    label: str


def signed_path(signs: Sequence[Sign], prefix: str) -> SignedGraph:
    """Path {prefix}.v0 ... {prefix}.v<n> with the given edge signs, left to right."""
    names = [
        f"{prefix}{Limits.COPY_SEPARATOR}{Limits.GADGET_VERTEX_PREFIX}{t}"
        for t in range(len(signs) + 1)
    ]
    edges = tuple((names[t], names[t + 1], s) for t, s in enumerate(signs))
    return SignedGraph(tuple(names), edges)


def gadget_path(
    family: GadgetFamily, length: int, index: int | None = None, prefix: str | None = None
) -> GadgetPath:
    """Build P, P_i, Q or Q_j; vertex names default to e.g. 'P3.v2'."""
    family = GadgetFamily(family)
    word = gadget_word(family, length, index)
    if prefix is None:
        prefix = ("P" if family.is_p else "Q") + (str(index) if index is not None else "")
    graph = signed_path(word.signs(), prefix)
    if family.is_p:
        endpoint, label = graph.vertices[-1], str(index) if index is not None else "0"
    else:
        endpoint, label = graph.vertices[0], str(index) if index is not None else "1"
    return GadgetPath(graph, word, endpoint, label)


def alternating_path(length: int, prefix: str = "AP") -> SignedGraph:
    """The path R B R B ... with `length` edges, starting with a negative edge."""
    signs = [Sign.NEGATIVE if t % 2 == 0 else Sign.POSITIVE for t in range(length)]
    return signed_path(signs, prefix)


# -----------------------------------------------------------------------------
# Retraction target and instance
# -----------------------------------------------------------------------------


def smallest_odd_at_least(n: int) -> int:
    return n if n % 2 == 1 else n + 1


def smallest_even_at_least(n: int) -> int:
    return n if n % 2 == 0 else n + 1


@dataclass(frozen=True)
class RetractionTarget:
    """The signed target built from a bipartite graph h = (A, B)."""

    graph: SignedGraph
    base: SignedGraph
    ell: int
    k: int
    side_a: tuple[str, ...]
    side_b: tuple[str, ...]


@dataclass(frozen=True)
class RetractionInstance:
    """The signed instance built from g containing h."""

    graph: SignedGraph
    target: RetractionTarget
    side_a: tuple[str, ...]
    side_b: tuple[str, ...]

    @property
    def free_a(self) -> tuple[str, ...]:
        return tuple(v for v in self.side_a if v not in self.target.side_a)

    @property
    def free_b(self) -> tuple[str, ...]:
        return tuple(v for v in self.side_b if v not in self.target.side_b)


class _Builder:
    def __init__(self, base: SignedGraph):
        self.vertices: list[str] = list(base.vertices)
        self.edges: list[Edge] = [Edge(u, v, Sign.POSITIVE) for u, v in base.adjacent_pairs]

    def attach(self, gadget: GadgetPath, anchor: str) -> None:
        rename = {gadget.endpoint: anchor}
        self.vertices.extend(v for v in gadget.graph.vertices if v != gadget.endpoint)
        self.edges.extend(
            Edge(rename.get(e.u, e.u), rename.get(e.v, e.v), e.sign) for e in gadget.graph.edges
        )

    def build(self) -> SignedGraph:
        return SignedGraph(tuple(self.vertices), tuple(self.edges))


def _colouring(g: SignedGraph) -> dict[str, int]:
    if g.loops:
        raise NotBipartite(f"loop at {g.loops[0].u}")
    if not g.is_connected:
        raise DisconnectedInput("the graph must be connected")
    try:
        return two_colour(g)
    except NonBipartite as exc:
        raise NotBipartite(f"odd cycle {' '.join(exc.cycle)}") from exc


def _attach_target_gadgets(
    builder: _Builder, ell: int, k: int, side_a: tuple[str, ...], side_b: tuple[str, ...]
) -> None:
    for i, a in enumerate(side_a, start=1):
        builder.attach(gadget_path(GadgetFamily.P_I, ell, i, prefix=f"P{i}"), a)
    for j, b in enumerate(side_b, start=1):
        builder.attach(gadget_path(GadgetFamily.Q_J, k, j, prefix=f"Q{j}"), b)


def build_retraction_target(
    h: SignedGraph, side_a: Iterable[str] | None = None
) -> RetractionTarget:
    """
    Attach P_i at the i-th vertex of A and Q_j at the j-th vertex of B.

    l is the smallest odd integer >= |A| + 2 and k the smallest even integer
    >= |B| + 2, so every P_i and Q_j needed exists. Original edges are positive.

    Q_j exists only for 1 <= j <= k - 2, so a side of size m needs k >= m + 2;
    rounding |B| up to an even k directly would give k = 2 for a single edge,
    which has no Q_1. The single edge therefore gets l = 3 and k = 4.

    Args:
        h: Connected, loop-free, bipartite graph (signs are ignored)
        side_a: Optional side A; defaults to the colour class of h's first vertex

    Raises:
        NotBipartite, DisconnectedInput, EmbeddingMismatch
    """
    base = underlying(h)
    colour = _colouring(base)
    if side_a is None:
        a_colour = 0
    else:
        chosen = set(side_a)
        classes = [{v for v in base.vertices if colour[v] == c} for c in (0, 1)]
        if chosen not in classes:
            raise EmbeddingMismatch("side A is not a colour class of h")
        a_colour = classes.index(chosen)
    a = tuple(v for v in base.vertices if colour[v] == a_colour)
    b = tuple(v for v in base.vertices if colour[v] != a_colour)

    ell = smallest_odd_at_least(len(a) + 2)
    k = smallest_even_at_least(len(b) + 2)
    builder = _Builder(base)
    _attach_target_gadgets(builder, ell, k, a, b)
    logger.debug("Retraction target: |A|=%d |B|=%d l=%d k=%d", len(a), len(b), ell, k)
    return RetractionTarget(builder.build(), base, ell, k, a, b)


def build_retraction_instance(
    g: SignedGraph, h: SignedGraph, side_a: Iterable[str] | None = None
) -> RetractionInstance:
    """
    Build the signed instance for g: the gadgets of the target on A and B, plus a
    copy of P attached by its distinguished vertex to every vertex of A' \\ A.

    Vertices of B' \\ B get no gadget.

    Raises:
        NotBipartite, DisconnectedInput, EmbeddingMismatch
    """
    target = build_retraction_target(h, side_a)
    base = underlying(g)
    colour = _colouring(base)

    for v in target.base.vertices:
        if v not in base:
            raise EmbeddingMismatch(f"{v} is not a vertex of g")
    for u, v in target.base.adjacent_pairs:
        if not base.has_edge(u, v):
            raise EmbeddingMismatch(f"edge {u} {v} of h is missing from g")

    a_colour = colour[target.side_a[0]]
    if any(colour[v] != a_colour for v in target.side_a) or any(
        colour[v] == a_colour for v in target.side_b
    ):
        raise EmbeddingMismatch("the bipartition of g does not extend that of h")

    side_a_prime = tuple(v for v in base.vertices if colour[v] == a_colour)
    side_b_prime = tuple(v for v in base.vertices if colour[v] != a_colour)

    builder = _Builder(base)
    _attach_target_gadgets(builder, target.ell, target.k, target.side_a, target.side_b)
    for v in side_a_prime:
        if v not in target.side_a:
            builder.attach(gadget_path(GadgetFamily.P, target.ell, prefix=f"P@{v}"), v)
    return RetractionInstance(builder.build(), target, side_a_prime, side_b_prime)


def unanchored_images(instance: RetractionInstance, witness: HomWitness) -> list[str]:
    """Vertices of B' \\ B that the retraction sends outside B."""
    side_b = set(instance.target.side_b)
    stray = [v for v in instance.free_b if witness.image(v) not in side_b]
    if stray:
        logger.warning("Vertices of B' \\ B mapped outside B: %s", " ".join(stray))
    return stray
