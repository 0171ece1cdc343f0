"""Pytest configuration and fixtures."""

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from src.sgraph.graph import Sign, SignedGraph
from src.sgraph.sgf import load

FIXTURES = Path(__file__).parent / "fixtures"

POS, NEG = Sign.POSITIVE, Sign.NEGATIVE


def fixture_graph(name: str) -> SignedGraph:
    """Load a golden SGF file from tests/fixtures."""
    return load(FIXTURES / name)


def cycle(n: int, negative: int = 0, prefix: str = "c") -> SignedGraph:
    """Cycle c0 ... c<n-1>; the first `negative` edges are negative."""
    names = tuple(f"{prefix}{i}" for i in range(n))
    edges = tuple(
        (names[i], names[(i + 1) % n], NEG if i < negative else POS) for i in range(n)
    )
    return SignedGraph(names, edges)


def path(n_edges: int, signs: str | None = None, prefix: str = "p") -> SignedGraph:
    """Path p0 ... p<n>; `signs` is a string of '+'/'-', all positive by default."""
    names = tuple(f"{prefix}{i}" for i in range(n_edges + 1))
    glyphs = signs or "+" * n_edges
    return SignedGraph(
        names, tuple((names[i], names[i + 1], glyphs[i]) for i in range(n_edges))
    )


def loop_path(n_edges: int) -> SignedGraph:
    """Positive path with a negative loop at its first vertex and a positive loop at its last."""
    g = path(n_edges)
    first, last = g.vertices[0], g.vertices[-1]
    return SignedGraph(g.vertices, (*g.edges, (first, first, NEG), (last, last, POS)))


# -----------------------------------------------------------------------------
# Hypothesis strategies
# -----------------------------------------------------------------------------

# Edge state of a vertex pair or a vertex: none, +, -, both
_STATES = ((), (POS,), (NEG,), (POS, NEG))


@st.composite
def signed_graphs(draw, min_vertices: int = 1, max_vertices: int = 6, loops: bool = True):
    """Random signed graphs on vertices a, b, c, ...; digons and loops included."""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    names = tuple("abcdefgh"[:n])
    edges = []
    for u, v in combinations(names, 2):
        edges.extend((u, v, s) for s in _STATES[draw(st.integers(0, 3))])
    if loops:
        for v in names:
            edges.extend((v, v, s) for s in _STATES[draw(st.sampled_from((0, 0, 1, 2, 3)))])
    return SignedGraph(names, tuple(edges))


@pytest.fixture
def five_cycle() -> SignedGraph:
    """5-cycle with one negative edge."""
    return fixture_graph("five-cycle.sg")


@pytest.fixture
def digon_triangle() -> SignedGraph:
    """Triangle with one negative digon."""
    return fixture_graph("digon-triangle.sg")


@pytest.fixture
def square_target() -> SignedGraph:
    """Unbalanced 4-cycle with a negative loop."""
    return fixture_graph("square-target.sg")


@pytest.fixture
def digon_both_loops() -> SignedGraph:
    """Two-vertex negative digon with a loop of each sign."""
    return fixture_graph("digon-loops.sg")


@pytest.fixture
def edge_positive() -> SignedGraph:
    return SignedGraph(("u", "v"), (("u", "v", POS),))


@pytest.fixture
def edge_negative() -> SignedGraph:
    return SignedGraph(("u", "v"), (("u", "v", NEG),))


@pytest.fixture
def negative_digon() -> SignedGraph:
    return SignedGraph(("u", "v"), (("u", "v", POS), ("u", "v", NEG)))


@pytest.fixture
def both_loops() -> SignedGraph:
    return SignedGraph(("u",), (("u", "u", POS), ("u", "u", NEG)))


@pytest.fixture
def unbalanced_c4() -> SignedGraph:
    return cycle(4, negative=1)


@pytest.fixture
def balanced_c4() -> SignedGraph:
    return cycle(4)
