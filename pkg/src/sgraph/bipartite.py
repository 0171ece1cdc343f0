"""Two-colouring of the underlying graph with an odd-cycle certificate."""

from collections import deque

from src.sgraph.graph import SignedGraph


class NonBipartite(Exception):
    """The underlying graph has an odd cycle (a loop counts as a cycle of length 1)."""

    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = cycle
        super().__init__(f"odd cycle {' '.join(cycle)}")


def _tree_path(parent: dict[str, str | None], v: str) -> list[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def two_colour(g: SignedGraph) -> dict[str, int]:
    """
    Find a proper 2-colouring of the underlying graph.

    Each component is explored breadth-first from its lowest-indexed vertex,
    which gets colour 0.

    Raises:
        NonBipartite: carrying a simple odd cycle, lifted through the BFS tree
    """
    if g.loops:
        raise NonBipartite((g.loops[0].u,))

    adjacency = {v: [w for w, _ in g.neighbours(v)] for v in g.vertices}
    colour: dict[str, int] = {}
    parent: dict[str, str | None] = {}

    for root in g.vertices:
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    parent[y] = x
                    queue.append(y)
                elif colour[y] == colour[x]:
                    raise NonBipartite(_odd_cycle(parent, x, y))
    return colour


def _odd_cycle(parent: dict[str, str | None], x: str, y: str) -> tuple[str, ...]:
    up_x = _tree_path(parent, x)
    up_y = _tree_path(parent, y)
    on_x = set(up_x)
    lca = next(v for v in up_y if v in on_x)
    head = up_x[: up_x.index(lca) + 1]
    tail = up_y[: up_y.index(lca)]
    return tuple(head + tail[::-1])


def is_bipartite(g: SignedGraph) -> bool:
    try:
        two_colour(g)
        return True
    except NonBipartite:
        return False


def bipartition(g: SignedGraph) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Colour classes (0, 1) in vertex order."""
    colour = two_colour(g)
    return (
        tuple(v for v in g.vertices if colour[v] == 0),
        tuple(v for v in g.vertices if colour[v] == 1),
    )
