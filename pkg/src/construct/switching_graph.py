"""
The switching graph P(G).

Every vertex u becomes a pair u.0, u.1. An edge uv of sign s gives u.0v.0 and
u.1v.1 of sign s and u.0v.1, u.1v.0 of sign -s; a loop of sign s at u gives a
loop of sign s at both copies and the edge u.0u.1 of sign -s. Same-sign
parallel edges (from digons) collapse.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from config.settings import Limits
from src.sgraph.graph import Edge, SignedGraph


def copy_name(vertex: str, bit: int) -> str:
    return f"{vertex}{Limits.COPY_SEPARATOR}{bit}"


@dataclass(frozen=True)
class PairedGraph:
    """A switching graph together with its vertex pairing."""

    graph: SignedGraph
    pairing: dict[str, tuple[str, str]]

    @cached_property
    def projection(self) -> dict[str, tuple[str, int]]:
        """Paired vertex -> (original vertex, copy bit)."""
        out: dict[str, tuple[str, int]] = {}
        for u, (zero, one) in self.pairing.items():
            out[zero] = (u, 0)
            out[one] = (u, 1)
        return out

    def copy(self, vertex: str, bit: int) -> str:
        return self.pairing[vertex][bit]

    def swap(self, switch_set: Iterable[str]) -> dict[str, str]:
        """Vertex map u.t -> u.(t xor [u in switch_set])."""
        xs = set(switch_set)
        return {
            pv: self.pairing[u][bit ^ (u in xs)] for pv, (u, bit) in self.projection.items()
        }


def switching_graph(g: SignedGraph) -> PairedGraph:
    """Build P(g); the 0-copies come first, then the 1-copies, each in g's order."""
    pairing = {u: (copy_name(u, 0), copy_name(u, 1)) for u in g.vertices}
    vertices = tuple(pairing[u][0] for u in g.vertices) + tuple(pairing[u][1] for u in g.vertices)

    edges: set[Edge] = set()
    for e in g.edges:
        u0, u1 = pairing[e.u]
        v0, v1 = pairing[e.v]
        edges.add(Edge(u0, v0, e.sign))
        edges.add(Edge(u1, v1, e.sign))
        if e.is_loop:
            edges.add(Edge(u0, u1, -e.sign))
        else:
            edges.add(Edge(u0, v1, -e.sign))
            edges.add(Edge(u1, v0, -e.sign))

    canonical = {(e.pair, e.sign): e for e in edges}
    return PairedGraph(SignedGraph(vertices, tuple(canonical.values())), pairing)
