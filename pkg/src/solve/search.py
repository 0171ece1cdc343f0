"""
Backtracking search for edge-colour-preserving vertex maps.

Domains are boolean matrices (source vertex x target vertex). Assigning a
source vertex prunes the domains of its neighbours to the target vertices
joined to the chosen image by an edge of the same sign (forward checking).
Candidates are tried in target vertex order along a fixed branching order, so
the first solution found is canonical.
"""

import logging
from collections.abc import Iterator

import numpy as np

from src.sgraph.graph import Sign, SignedGraph

logger = logging.getLogger(__name__)


class HomSearch:
    """Complete search for ec-homomorphisms from `source` to `target`."""

    def __init__(
        self,
        source: SignedGraph,
        target: SignedGraph,
        domains: np.ndarray | None = None,
        classes: np.ndarray | None = None,
    ):
        """
        Args:
            source: Graph being mapped
            target: Graph mapped into
            domains: Optional initial candidate matrix (pins, retraction constraints)
            classes: Optional class id per target vertex; at most one source
                vertex may land in each class (injectivity)
        """
        self.source = source
        self.target = target
        n, m = source.order, target.order

        if domains is None:
            domains = np.ones((n, m), dtype=bool)
        self.domains = np.array(domains, dtype=bool, copy=True)
        for e in source.loops:
            self.domains[source.index[e.u]] &= np.diag(target.adjacency(e.sign))

        self._adjacency = {s: target.adjacency(s) for s in Sign}
        self._neighbours = [
            [(source.index[w], s) for w, s in source.neighbours(v)] for v in source.vertices
        ]
        self._classes = None if classes is None else np.asarray(classes)
        self._order = self._branching_order()
        self.nodes = 0

    def _branching_order(self) -> list[int]:
        """Pinned vertices first, then most already-ordered neighbours, then degree."""
        adjacent = [{w for w, _ in nbrs} for nbrs in self._neighbours]
        sizes = self.domains.sum(axis=1)
        placed: set[int] = set()
        order: list[int] = []
        remaining = set(range(self.source.order))
        while remaining:
            v = min(
                remaining,
                key=lambda u: (sizes[u] > 1, -len(adjacent[u] & placed), -len(adjacent[u]), u),
            )
            order.append(v)
            placed.add(v)
            remaining.remove(v)
        return order

    def solutions(self) -> Iterator[tuple[int, ...]]:
        """Yield every solution as a tuple of target indices, in canonical order."""
        if self.source.order == 0:
            yield ()
            return
        if not self.domains.any(axis=1).all():
            return
        assignment = [-1] * self.source.order
        yield from self._extend(0, self.domains, assignment)

    def first(self) -> tuple[int, ...] | None:
        solution = next(self.solutions(), None)
        logger.debug(
            "Search %d -> %d vertices: %s after %d nodes",
            self.source.order,
            self.target.order,
            "found" if solution is not None else "none",
            self.nodes,
        )
        return solution

    def _extend(
        self, depth: int, domains: np.ndarray, assignment: list[int]
    ) -> Iterator[tuple[int, ...]]:
        if depth == len(self._order):
            yield tuple(assignment)
            return
        v = self._order[depth]
        for t in np.flatnonzero(domains[v]):
            self.nodes += 1
            child = self._assign(domains, v, int(t), depth)
            if child is None:
                continue
            assignment[v] = int(t)
            yield from self._extend(depth + 1, child, assignment)
        assignment[v] = -1

    def _assign(self, domains: np.ndarray, v: int, t: int, depth: int) -> np.ndarray | None:
        child = domains.copy()
        child[v] = False
        child[v, t] = True
        for w, sign in self._neighbours[v]:
            child[w] &= self._adjacency[sign][t]
            if not child[w].any():
                return None
        if self._classes is not None:
            later = self._order[depth + 1 :]
            if later:
                child[np.ix_(later, self._classes == self._classes[t])] = False
                if not child[later].any(axis=1).all():
                    return None
        return child
