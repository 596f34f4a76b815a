"""Edge-disjoint spanning tree packing via matroid-union augmentation.

Each edge is offered to the two-forest union once; an exchange-path BFS
(shortest augmenting sequence over "remove y from its forest to admit x"
moves) either absorbs it or proves the union rank cannot grow with it.
After the single pass the union is a maximum partition-independent set,
so two spanning trees exist iff the final forests both have n-1 edges.
Desk-scale replacement for Roskind-Tarjan with the same output contract.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractViolationError, InfeasibleError
from .graph import Graph


@dataclass(frozen=True)
class TreePair:
    """Two edge-disjoint spanning trees, as sorted edge-id tuples."""

    tree_a: tuple[int, ...]
    tree_b: tuple[int, ...]


def edge_disjoint_spanning_trees(g: Graph) -> TreePair:
    """Find two edge-disjoint spanning trees of g.

    Raises InfeasibleError when no packing exists (the matroid-union
    rank certifies this); four-edge-connected graphs always succeed.
    """
    owner = [-1] * g.m  # forest index 0/1, or -1
    for e0 in range(g.m):
        _augment(g, owner, e0)
        _check_forests(g, owner)
    sizes = [owner.count(0), owner.count(1)]
    if sizes[0] == sizes[1] == g.n - 1:
        return TreePair(
            tuple(e for e in range(g.m) if owner[e] == 0),
            tuple(e for e in range(g.m) if owner[e] == 1),
        )
    raise InfeasibleError(
        "packing-infeasible",
        f"no two edge-disjoint spanning trees: maximum packing has forest "
        f"sizes {sizes[0]} and {sizes[1]}, need {g.n - 1} each",
    )


def _forest_cycle_path(g: Graph, owner: list[int], forest: int, a: int, b: int) -> list[int] | None:
    """Edge ids of the a-b path inside the given forest, or None when a
    and b are in different forest components (the new edge fits)."""
    if a == b:
        return []
    parent_edge: dict[int, int] = {a: -1}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w, eid in g.adj[v]:
            if owner[eid] != forest or w in parent_edge:
                continue
            parent_edge[w] = eid
            if w == b:
                path = []
                x = b
                while parent_edge[x] != -1:
                    eid = parent_edge[x]
                    path.append(eid)
                    u, v2 = g.edges[eid]
                    x = u if x == v2 else v2
                return path
            queue.append(w)
    return None


def _augment(g: Graph, owner: list[int], e0: int) -> bool:
    """Try to grow the union with edge e0 via a shortest exchange path."""
    start_states = [(e0, 0), (e0, 1)]
    parent: dict[tuple[int, int], tuple[int, int] | None] = {s: None for s in start_states}
    queue = deque(start_states)
    while queue:
        x, forest = queue.popleft()
        u, v = g.edges[x]
        path = _forest_cycle_path(g, owner, forest, u, v)
        if path is None:
            # x fits: apply the whole exchange chain
            state: tuple[int, int] | None = (x, forest)
            while state is not None:
                owner[state[0]] = state[1]
                state = parent[state]
            return True
        for y in path:
            nxt = (y, 1 - forest)
            if nxt not in parent:
                parent[nxt] = (x, forest)
                queue.append(nxt)
    return False


def _check_forests(g: Graph, owner: list[int]) -> None:
    """Assert both colored edge sets are forests (exchange-path safety net)."""
    for forest in (0, 1):
        parent = list(range(g.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for eid in range(g.m):
            if owner[eid] != forest:
                continue
            ra, rb = find(g.edges[eid][0]), find(g.edges[eid][1])
            if ra == rb:
                raise ContractViolationError(
                    f"matroid-union exchange produced a cycle in forest {forest}"
                )
            parent[ra] = rb
