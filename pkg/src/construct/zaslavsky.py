"""Targets for Zaslavsky colourings."""

from itertools import combinations

from src.sgraph.graph import Sign, SignedGraph


def zaslavsky_target(k: int, zero_free: bool = False) -> SignedGraph:
    """
    The colouring target on colours {0, 1, ..., k}.

    A digon joins every pair of distinct vertices and vertices 1..k
    carry a negative loop. With `zero_free`, vertex 0 is deleted.

    Raises:
        ValueError: if k < 1
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    colours = [str(c) for c in range(0 if not zero_free else 1, k + 1)]
    edges: list[tuple[str, str, Sign]] = []
    for a, b in combinations(colours, 2):
        edges.append((a, b, Sign.POSITIVE))
        edges.append((a, b, Sign.NEGATIVE))
    edges.extend((c, c, Sign.NEGATIVE) for c in colours if c != "0")
    return SignedGraph(tuple(colours), tuple(edges))
