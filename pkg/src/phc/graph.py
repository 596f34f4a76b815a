"""Simple undirected graphs and the structural subroutines the
constructions rely on: connectivity, bipartition / odd-cycle extraction,
bridge finding, two-edge-connected components, edge-connectivity tests,
and ear decomposition.

Vertices are the integers 0..n-1. Edges are unordered pairs stored as
(u, v) with u < v, identified by their 0-based position in the edge
list. All operations are pure functions of immutable inputs and are
deterministic: adjacency lists are sorted and ties break toward the
lowest index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import counters
from .errors import GraphFormatError, PreconditionError


class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: number of vertices (ids are exactly 0..n-1).
        edges: tuple of (u, v) pairs with u < v; the position of a pair
            is its edge id.
        adj: per-vertex tuple of (neighbor, edge_id) pairs sorted by
            neighbor.
    """

    __slots__ = ("n", "edges", "adj", "_edge_ids")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        norm: list[tuple[int, int]] = []
        seen: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen[(u, v)] = len(norm)
            norm.append((u, v))
        self.n = n
        self.edges = tuple(norm)
        self._edge_ids = seen
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._edge_ids[(u, v)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """Proper 2-coloring; side[v] is 0 or 1 and every edge joins 0 to 1."""

    side: tuple[int, ...]


@dataclass(frozen=True)
class OddCycle:
    """Simple cycle of odd length; consecutive vertices (cyclically) are
    adjacent and all vertices are distinct."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class EarDecomposition:
    """Base cycle plus ordered ears; replaying base then ears rebuilds
    exactly the host edge set.

    Each ear is a vertex sequence v0..vk (k >= 1) whose endpoints already
    belong to the built subgraph and whose internal vertices are new; a
    closed ear has v0 == vk.
    """

    base: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BridgeDecomposition:
    """Bridges of a connected graph plus the two-edge-connected components
    of G - bridges (components of size >= 2) and the isolated vertices."""

    bridges: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: first non-comment line is "n m"; then m lines "u v" with
    0 <= u, v < n (pairs in either order are normalized to u < v).
    '#' starts a comment, tokens are whitespace-separated.
    """
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("bad-header", "empty document")
    header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("bad-header", f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("bad-header", f"non-integer header {' '.join(header)!r}") from None
    if n < 1:
        raise GraphFormatError("bad-header", f"vertex count must be positive, got {n}")
    if m < 0 or len(rows) - 1 != m:
        raise GraphFormatError(
            "bad-header", f"expected {m} edge lines, found {len(rows) - 1}"
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphFormatError("malformed", f"edge line must be 'u v', got {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            raise GraphFormatError("malformed", f"non-integer edge line {' '.join(row)!r}") from None
        if u == v:
            raise GraphFormatError("self-loop", f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if not (0 <= u < v < n):
            raise GraphFormatError("bad-vertex", f"vertex id out of range in edge ({u}, {v})")
        if (u, v) in seen:
            raise GraphFormatError("duplicate-edge", f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n <= 1)."""
    return len(_bfs_order(g, 0)) == g.n


def _bfs_order(g: Graph, start: int) -> list[int]:
    seen = bytearray(g.n)
    seen[start] = 1
    order = [start]
    queue = deque([start])
    steps = 0
    while queue:
        v = queue.popleft()
        for w, _eid in g.adj[v]:
            steps += 1
            if not seen[w]:
                seen[w] = 1
                order.append(w)
                queue.append(w)
    counters.bump("bfs_steps", steps + len(order))
    return order


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by
    smallest member."""
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = 1
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w, _eid in g.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def bipartition_or_odd_cycle(g: Graph) -> Bipartition | OddCycle:
    """2-color a connected graph, or extract a simple odd cycle.

    BFS coloring; the first same-color cross edge closes an odd cycle
    through the BFS-tree paths to the common ancestor, which is already
    simple.
    """
    if not is_connected(g):
        raise PreconditionError("bipartition_or_odd_cycle requires a connected graph")
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    side[0] = 0
    queue = deque([0])
    steps = 0
    while queue:
        v = queue.popleft()
        for w, _eid in g.adj[v]:
            steps += 1
            if side[w] == -1:
                side[w] = 1 - side[v]
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
            elif side[w] == side[v]:
                counters.bump("bfs_steps", steps)
                return OddCycle(_tree_cycle(parent, depth, v, w))
    counters.bump("bfs_steps", steps)
    return Bipartition(tuple(side))


def _tree_cycle(parent: list[int], depth: list[int], u: int, v: int) -> tuple[int, ...]:
    """Cycle formed by edge (u, v) plus the tree paths to their lowest
    common ancestor."""
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the ancestor; drop it from the right-hand path
    return tuple(left + right[-2::-1]) if len(right) > 1 else tuple(left)


def bridges_and_components(g: Graph) -> BridgeDecomposition:
    """Bridges of a connected graph, the two-edge-connected components of
    G - bridges, and the vertices isolated by the removal."""
    if not is_connected(g):
        raise PreconditionError("bridges_and_components requires a connected graph")
    bridges = _bridges(g)
    bridge_set = set(bridges)
    seen = bytearray(g.n)
    comps: list[tuple[int, ...]] = []
    isolated: list[int] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, eid in g.adj[v]:
                if eid not in bridge_set and not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        if len(comp) == 1:
            isolated.append(s)
        else:
            comps.append(tuple(sorted(comp)))
    return BridgeDecomposition(tuple(bridges), tuple(comps), tuple(isolated))


def _bridges(g: Graph) -> list[int]:
    """Sorted edge ids of all bridges (iterative low-link DFS)."""
    pre = [-1] * g.n
    low = [0] * g.n
    bridges: list[int] = []
    clock = 0
    for root in range(g.n):
        if pre[root] != -1:
            continue
        stack: list[list[int]] = [[root, 0, -1]]
        pre[root] = low[root] = clock
        clock += 1
        while stack:
            frame = stack[-1]
            v, idx, in_eid = frame
            if idx < len(g.adj[v]):
                frame[1] += 1
                w, eid = g.adj[v][idx]
                if eid == in_eid:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = clock
                    clock += 1
                    stack.append([w, 0, eid])
                else:
                    low[v] = min(low[v], pre[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > pre[p]:
                        bridges.append(in_eid)
    return sorted(bridges)


def two_edge_connected(g: Graph) -> bool:
    """True iff g is connected with no bridges (n >= 2)."""
    return g.n >= 2 and is_connected(g) and not _bridges(g)


def edge_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff the min cut has size >= k.

    Unit-capacity max-flow from vertex 0 to every other vertex, stopping
    each computation as soon as k augmenting paths are found. Correctness
    over speed; intended for desk-scale inputs.
    """
    if k <= 0 or g.n <= 1:
        return True
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if min(g.degree(v) for v in range(g.n)) < k:
        return False
    for t in range(1, g.n):
        if _max_flow(g, 0, t, limit=k) < k:
            return False
    return True


def _max_flow(g: Graph, s: int, t: int, limit: int) -> int:
    """Unit-capacity max-flow via BFS augmentation, stopping at `limit`.

    Each undirected edge becomes a pair of antiparallel unit arcs.
    """
    cap = [1] * (2 * g.m)  # arc eid = u->v, arc eid+m = v->u
    flow = 0
    while flow < limit:
        prev_arc = [-1] * g.n
        prev_arc[s] = -2
        queue = deque([s])
        while queue and prev_arc[t] == -1:
            v = queue.popleft()
            for w, eid in g.adj[v]:
                arc = eid if v == g.edges[eid][0] else eid + g.m
                if cap[arc] > 0 and prev_arc[w] == -1:
                    prev_arc[w] = arc
                    queue.append(w)
        if prev_arc[t] == -1:
            break
        v = t
        while v != s:
            arc = prev_arc[v]
            cap[arc] -= 1
            cap[arc + g.m if arc < g.m else arc - g.m] += 1
            eid = arc if arc < g.m else arc - g.m
            u, w = g.edges[eid]
            v = u if (arc < g.m) else w
        flow += 1
    return flow


def shortest_cycle_through_edge(g: Graph, eid: int) -> tuple[int, ...] | None:
    """Shortest simple cycle containing edge eid, as a vertex tuple
    starting at the lower endpoint, or None when eid is a bridge.

    BFS in G - eid with ascending neighbor order, so ties resolve
    deterministically.
    """
    u, v = g.edges[eid]
    parent = [-1] * g.n
    parent[u] = u
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b, e2 in g.adj[a]:
            if e2 == eid or parent[b] != -1:
                continue
            parent[b] = a
            if b == v:
                path = [v]
                while path[-1] != u:
                    path.append(parent[path[-1]])
                path.reverse()
                return tuple(path)
            queue.append(b)
    return None


def cycles_through_edge(g: Graph, eid: int, max_len: int):
    """Yield every simple cycle through edge eid with length <= max_len,
    ordered by (length, vertex sequence).

    Cycles are vertex tuples starting at the lower endpoint u and ending
    at the higher endpoint v, closed by the edge itself.
    """
    u, v = g.edges[eid]
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], used: set[int]) -> None:
        last = path[-1]
        for w, e2 in g.adj[last]:
            if e2 == eid:
                continue
            if w == v:
                found.append(tuple(path + [v]))
                continue
            if w in used:
                continue
            if len(path) + 1 < max_len:
                used.add(w)
                path.append(w)
                extend(path, used)
                path.pop()
                used.remove(w)

    extend([u], {u, v})
    found.sort(key=lambda c: (len(c), c))
    yield from found


def cycle_through_edge_of_length(g: Graph, eid: int, length: int) -> tuple[int, ...] | None:
    """First simple cycle through eid of exactly the given length, in
    (length, sequence) order, or None."""
    for cyc in cycles_through_edge(g, eid, length):
        if len(cyc) == length:
            return cyc
    return None


def ear_decomposition(g: Graph, base_cycle=None) -> EarDecomposition:
    """Ear decomposition of a two-edge-connected graph with |E| >= 3.

    Deterministic rule: the base is the shortest cycle through edge 0
    (lexicographic BFS tie-break) unless an explicit base cycle is
    supplied; each subsequent ear starts at the smallest built vertex
    with an unbuilt incident edge, takes its smallest such edge, and
    runs through unbuilt vertices back to the built subgraph along a
    BFS-shortest route.
    """
    if g.m < 3:
        raise PreconditionError("ear decomposition needs at least 3 edges")
    if not two_edge_connected(g):
        raise PreconditionError("ear decomposition requires a two-edge-connected graph")
    if base_cycle is not None:
        base = tuple(base_cycle)
        if len(set(base)) != len(base) or len(base) < 3:
            raise PreconditionError("base cycle must be a simple cycle")
        for i, a in enumerate(base):
            if not g.has_edge(a, base[(i + 1) % len(base)]):
                raise PreconditionError("base cycle is not a cycle of the graph")
    else:
        base = shortest_cycle_through_edge(g, 0)
    assert base is not None  # no bridges
    built_v = bytearray(g.n)
    built_e = bytearray(g.m)
    for i, a in enumerate(base):
        built_v[a] = 1
        built_e[g.edge_id(a, base[(i + 1) % len(base)])] = 1
    built_edges = len(base)
    ears: list[tuple[int, ...]] = []
    while built_edges < g.m:
        ear = _next_ear(g, built_v, built_e)
        for i in range(len(ear) - 1):
            built_e[g.edge_id(ear[i], ear[i + 1])] = 1
            built_v[ear[i]] = 1
        built_v[ear[-1]] = 1
        built_edges += len(ear) - 1
        ears.append(ear)
    return EarDecomposition(base, tuple(ears))


def _next_ear(g: Graph, built_v: bytearray, built_e: bytearray) -> tuple[int, ...]:
    """Smallest ear leaving the built subgraph (see ear_decomposition)."""
    start = -1
    first_edge = -1
    for v in range(g.n):
        if not built_v[v]:
            continue
        for w, eid in g.adj[v]:
            if not built_e[eid]:
                start, first_edge = v, eid
                break
        if start != -1:
            break
    assert start != -1, "unbuilt edges remain but none touch the built subgraph"
    u = g.edges[first_edge][0] if g.edges[first_edge][1] == start else g.edges[first_edge][1]
    if built_v[u]:
        return (start, u)
    # BFS from u through unbuilt vertices to the nearest built vertex.
    parent: dict[int, int] = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b, eid in g.adj[a]:
            if eid == first_edge:
                continue
            if built_v[b]:
                path = [b, a]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                path.append(start)
                path.reverse()
                return tuple(path)
            if b not in parent:
                parent[b] = a
                queue.append(b)
    raise AssertionError("two-edge-connected invariant violated during ear search")


def replay_ear_decomposition(g: Graph, dec: EarDecomposition) -> set[int]:
    """Edge ids reconstructed by replaying base then ears (for checks)."""
    eids: set[int] = set()
    cyc = dec.base
    for i, a in enumerate(cyc):
        eids.add(g.edge_id(a, cyc[(i + 1) % len(cyc)]))
    for ear in dec.ears:
        for i in range(len(ear) - 1):
            eids.add(g.edge_id(ear[i], ear[i + 1]))
    return eids


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on the given vertices.

    Returns the new graph and the new-id -> old-id vertex map. New edges
    are ordered by old edge id.
    """
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for (u, v) in g.edges
        if u in index and v in index
    ]
    return Graph(len(vs), edges), vs


def edge_subgraph(g: Graph, edge_ids) -> tuple[Graph, list[int], list[int]]:
    """Subgraph spanned by the given edges.

    Returns (subgraph, new-id -> old-id vertex map, new edge id -> old
    edge id map). Edges keep ascending old-id order.
    """
    eids = sorted(set(edge_ids))
    vs = sorted({w for e in eids for w in g.edges[e]})
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[g.edges[e][0]], index[g.edges[e][1]]) for e in eids]
    return Graph(len(vs), edges), vs, eids
