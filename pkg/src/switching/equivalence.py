"""
Switching, closed-walk signs, balance and switching equivalence.

`equivalent` is a certifying algorithm: it either returns a cut (a switch set X
with switch(g, X) carrying the other signature) or a cycle whose sign differs
between the two signatures.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence

import networkx as nx

from src.models.witnesses import EquivCertificate
from src.sgraph.graph import Edge, Sign, SignedGraph, SignedGraphError

logger = logging.getLogger(__name__)


class GraphMismatch(SignedGraphError):
    """The two signatures do not live on the same underlying graph."""

    pass


class NotAWalk(SignedGraphError):
    """Consecutive walk vertices are not joined by the named edge."""

    pass


class NotClosed(SignedGraphError):
    """A walk does not return to its first vertex."""

    pass


# -----------------------------------------------------------------------------
# Switching and walk signs
# -----------------------------------------------------------------------------


def switch(g: SignedGraph, switch_set: Iterable[str]) -> SignedGraph:
    """Flip every non-loop edge with exactly one endpoint in the switch set."""
    xs = set(switch_set)
    for v in xs:
        g.require(v)
    edges = [
        e if e.is_loop or (e.u in xs) == (e.v in xs) else Edge(e.u, e.v, -e.sign)
        for e in g.edges
    ]
    return SignedGraph(g.vertices, tuple(edges))


def closed_walk_sign(
    g: SignedGraph, walk: Sequence[str], signs: Sequence[Sign] | None = None
) -> Sign:
    """
    Product of the edge signs along a closed walk, with multiplicity.

    Args:
        g: The signed graph
        walk: Vertex sequence whose last vertex equals its first
        signs: Sign of the edge used at each step; required at digon steps

    Raises:
        NotClosed: if the walk does not end where it starts
        NotAWalk: if a step has no matching edge or is ambiguous
    """
    if len(walk) < 2:
        raise NotAWalk("a closed walk needs at least one step")
    if walk[0] != walk[-1]:
        raise NotClosed(f"walk starts at {walk[0]} but ends at {walk[-1]}")
    if signs is not None and len(signs) != len(walk) - 1:
        raise NotAWalk("one sign is needed per step")

    for v in walk:
        g.require(v)

    result = Sign.POSITIVE
    for step, (u, v) in enumerate(zip(walk, walk[1:])):
        available = g.pair_signs(u, v)
        if not available:
            raise NotAWalk(f"no edge between {u} and {v}")
        if signs is not None:
            sign = Sign.parse(signs[step])
            if sign not in available:
                raise NotAWalk(f"no {sign.value} edge between {u} and {v}")
        elif len(available) == 2:
            raise NotAWalk(f"step {u} {v} runs through a digon; name the edge sign")
        else:
            (sign,) = available
        result = result * sign
    return result


def same_signature(g: SignedGraph, other: SignedGraph) -> bool:
    """Equal vertex sets and equal signed edge sets, regardless of vertex order."""
    key = lambda h: {(e.pair, e.sign) for e in h.edges}  # noqa: E731
    return set(g.vertices) == set(other.vertices) and key(g) == key(other)


# -----------------------------------------------------------------------------
# Certifying equivalence
# -----------------------------------------------------------------------------


def _multiplicities(g: SignedGraph) -> dict[frozenset[str], int]:
    counts: dict[frozenset[str], int] = {}
    for e in g.edges:
        counts[e.pair] = counts.get(e.pair, 0) + 1
    return counts


def _check_same_underlying(g: SignedGraph, other: SignedGraph) -> None:
    if set(g.vertices) != set(other.vertices):
        raise GraphMismatch("vertex sets differ")
    if _multiplicities(g) != _multiplicities(other):
        raise GraphMismatch("adjacent pairs, digons or loops differ")


def _tree_route(parent: dict[str, str | None], a: str, b: str) -> list[str]:
    """Vertices on the tree path from a to b."""
    up_a = [a]
    while parent[up_a[-1]] is not None:
        up_a.append(parent[up_a[-1]])
    up_b = [b]
    while parent[up_b[-1]] is not None:
        up_b.append(parent[up_b[-1]])
    on_a = set(up_a)
    lca = next(v for v in up_b if v in on_a)
    return up_a[: up_a.index(lca) + 1] + up_b[: up_b.index(lca)][::-1]


def equivalent(g: SignedGraph, other: SignedGraph) -> EquivCertificate:
    """
    Decide whether `other` is obtained from `g` by switching.

    Components of the graph of edges whose sign agrees are contracted; the
    disagreeing edges must then form a bipartite graph on the components.
    Digon pairs are ignored since every switching keeps them as digons.

    Raises:
        GraphMismatch: if the two graphs differ as unsigned multigraphs
    """
    _check_same_underlying(g, other)

    for e in g.loops:
        if len(g.loop_signs(e.u)) == 1 and other.loop_signs(e.u) != g.loop_signs(e.u):
            logger.debug("Loop at %s changes sign", e.u)
            return EquivCertificate.from_cycle((e.u,))

    agree: dict[str, list[str]] = {v: [] for v in g.vertices}
    differ: list[tuple[str, str]] = []
    for u, v in g.adjacent_pairs:
        if len(g.pair_signs(u, v)) == 2:
            continue
        if g.pair_signs(u, v) == other.pair_signs(u, v):
            agree[u].append(v)
            agree[v].append(u)
        else:
            differ.append((u, v))

    # Components of agreeing edges, each with a BFS tree rooted at its lowest vertex
    component: dict[str, str] = {}
    tree: dict[str, str | None] = {}
    for root in g.vertices:
        if root in component:
            continue
        component[root] = root
        tree[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in agree[x]:
                if y not in component:
                    component[y] = root
                    tree[y] = x
                    queue.append(y)

    crossing: dict[str, list[tuple[str, str]]] = {c: [] for c in set(component.values())}
    for u, v in differ:
        crossing[component[u]].append((u, v))
        crossing[component[v]].append((v, u))

    # Two-colour the contracted graph
    colour: dict[str, int] = {}
    up: dict[str, tuple[str, str] | None] = {}
    roots = [v for v in g.vertices if component[v] == v]
    for start in roots:
        if start in colour:
            continue
        colour[start] = 0
        up[start] = None
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for x, y in crossing[c]:
                d = component[y]
                if d not in colour:
                    colour[d] = 1 - colour[c]
                    up[d] = (x, y)
                    queue.append(d)
                elif colour[d] == colour[c]:
                    cycle = _lift_odd_cycle(x, y, component, tree, up)
                    logger.debug("Signatures differ on cycle %s", cycle)
                    return EquivCertificate.from_cycle(tuple(cycle))

    switch_set = tuple(v for v in g.vertices if colour[component[v]] == 1)
    return EquivCertificate.cut(switch_set)


def _lift_odd_cycle(
    x: str,
    y: str,
    component: dict[str, str],
    tree: dict[str, str | None],
    up: dict[str, tuple[str, str] | None],
) -> list[str]:
    """Lift the odd contracted cycle closed by the disagreeing edge xy to a simple cycle."""

    def chain(c: str) -> list[str]:
        out = [c]
        while up[out[-1]] is not None:
            out.append(component[up[out[-1]][0]])
        return out

    chain_x, chain_y = chain(component[x]), chain(component[y])
    meet = next(c for c in chain_y if c in set(chain_x))

    def climb(v: str) -> list[str]:
        path = [v]
        c = component[v]
        while c != meet:
            outer, inner = up[c]
            path.extend(_tree_route(tree, path[-1], inner)[1:])
            path.append(outer)
            c = component[outer]
        return path

    left, right = climb(x), climb(y)
    middle = _tree_route(tree, left[-1], right[-1])
    return left + middle[1:] + right[::-1][1:]


def is_balanced(g: SignedGraph) -> tuple[bool, EquivCertificate]:
    """
    Balance test.

    Returns (True, cut) where switching at the cut makes every edge positive, or
    (False, cycle) with a negative cycle: a digon, a negative loop, or a cycle
    found by comparing against the all-positive signature.
    """
    if g.digons:
        u, v = g.digons[0]
        return False, EquivCertificate.from_cycle((u, v), (Sign.POSITIVE, Sign.NEGATIVE))
    for e in g.loops:
        if e.sign.is_negative:
            signs = (Sign.NEGATIVE,) if len(g.loop_signs(e.u)) == 2 else None
            return False, EquivCertificate.from_cycle((e.u,), signs)
    certificate = equivalent(g, g.all_positive())
    return certificate.is_cut, certificate


# -----------------------------------------------------------------------------
# Cycle-basis cross-check
# -----------------------------------------------------------------------------


def fundamental_cycles(g: SignedGraph) -> list[tuple[str, ...]]:
    """Fundamental cycles of a spanning forest of the single-edge (non-digon) pairs."""
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(p for p in g.adjacent_pairs if len(g.pair_signs(*p)) == 1)
    return [tuple(c) for c in nx.cycle_basis(graph)]


def same_cycle_signs(g: SignedGraph, other: SignedGraph) -> bool:
    """True iff loops and every fundamental cycle have the same sign in both graphs."""
    _check_same_underlying(g, other)
    if any(g.loop_signs(e.u) != other.loop_signs(e.u) for e in g.loops):
        return False
    for cycle in fundamental_cycles(g):
        walk = [*cycle, cycle[0]]
        if closed_walk_sign(g, walk) is not closed_walk_sign(other, walk):
            return False
    return True


def verify_certificate(g: SignedGraph, other: SignedGraph, cert: EquivCertificate) -> bool:
    """Check a certificate returned by `equivalent` against both graphs."""
    if cert.is_cut:
        return same_signature(switch(g, cert.switch_set), other)
    walk = cert.walk()
    return closed_walk_sign(g, walk, cert.cycle_signs) is not closed_walk_sign(
        other, walk, cert.cycle_signs
    )
