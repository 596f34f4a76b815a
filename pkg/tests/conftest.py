"""Shared graph builders and the exhaustive small-graph corpus.

The corpus of all connected graphs on up to 7 vertices (one per
isomorphism class) comes from the networkx graph atlas; everything else
is hand-built and kept in canonical edge order (pairs sorted, list
sorted).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from phc.graph import Graph


def build(n: int, edges) -> Graph:
    return Graph(n, sorted(tuple(sorted(e)) for e in edges))


def complete(n: int) -> Graph:
    return build(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(leaves: int) -> Graph:
    return build(leaves + 1, [(0, i + 1) for i in range(leaves)])


def prism() -> Graph:
    return build(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def cube() -> Graph:
    return build(8, [(i, i ^ 1) for i in range(8) if i < (i ^ 1)]
                 + [(i, i ^ 2) for i in range(8) if i < (i ^ 2)]
                 + [(i, i ^ 4) for i in range(8) if i < (i ^ 4)])


def wagner() -> Graph:
    # Moebius ladder on 8 vertices: an 8-cycle plus the four diameters
    return build(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def octahedron() -> Graph:
    return build(6, [e for e in itertools.combinations(range(6), 2)
                     if e not in [(0, 1), (2, 3), (4, 5)]])


def theta() -> Graph:
    # 4-cycle plus a path of length two across it
    return build(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)])


def bowtie() -> Graph:
    # two triangles sharing one vertex
    return build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def diamond() -> Graph:
    return build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def two_triangles_bridge() -> Graph:
    return build(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


def c4_pendant() -> Graph:
    # 4-cycle 0-1-2-3 with a pendant edge at 0
    return build(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])


def c5_pendant() -> Graph:
    return build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])


def grid2(k: int) -> Graph:
    # 2 x k grid, vertices v = 2*col + row
    edges = []
    for col in range(k):
        edges.append((2 * col, 2 * col + 1))
        if col + 1 < k:
            edges.append((2 * col, 2 * col + 2))
            edges.append((2 * col + 1, 2 * col + 3))
    return build(2 * k, edges)


def from_networkx(ag) -> Graph:
    nodes = sorted(ag.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build(len(nodes), ((index[u], index[v]) for u, v in ag.edges()))


@lru_cache(maxsize=None)
def connected_atlas(max_n: int = 7) -> tuple[Graph, ...]:
    """All connected graphs with 1..max_n vertices, one per isomorphism
    class, in atlas order."""
    out = []
    for ag in graph_atlas_g():
        n = ag.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(ag):
            out.append(from_networkx(ag))
    return tuple(out)


def all_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle (canonical rotation: min vertex first, smaller
    neighbor second) by exhaustive path extension; test-corpus sized."""
    cycles = set()

    def extend(pathv: list[int], used: set[int]) -> None:
        last = pathv[-1]
        for w, _eid in g.adj[last]:
            if w == pathv[0] and len(pathv) >= 3 and pathv[1] < last:
                cycles.add(tuple(pathv))
            elif w not in used and w > pathv[0]:
                used.add(w)
                pathv.append(w)
                extend(pathv, used)
                pathv.pop()
                used.remove(w)

    for s in range(g.n):
        extend([s], {s})
    return sorted(cycles, key=lambda c: (len(c), c))
