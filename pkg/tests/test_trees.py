"""Edge-disjoint spanning tree packing."""

from __future__ import annotations

import itertools

import pytest

from conftest import complete, connected_atlas, cycle, octahedron
from phc.errors import InfeasibleError
from phc.graph import Graph, edge_connectivity_at_least, is_connected
from phc.trees import edge_disjoint_spanning_trees


def _assert_valid_pair(g: Graph, pair) -> None:
    a, b = set(pair.tree_a), set(pair.tree_b)
    assert len(a) == len(b) == g.n - 1
    assert not a & b
    for tree in (a, b):
        sub = Graph(g.n, [g.edges[e] for e in sorted(tree)])
        assert is_connected(sub)


def test_k5_pair():
    _assert_valid_pair(complete(5), edge_disjoint_spanning_trees(complete(5)))


def test_octahedron_pair():
    _assert_valid_pair(octahedron(), edge_disjoint_spanning_trees(octahedron()))


def test_c4_infeasible():
    with pytest.raises(InfeasibleError):
        edge_disjoint_spanning_trees(cycle(4))


def test_k4_pair():
    _assert_valid_pair(complete(4), edge_disjoint_spanning_trees(complete(4)))


def _has_packing_bruteforce(g: Graph) -> bool:
    if g.m < 2 * (g.n - 1):
        return False
    for tree_edges in itertools.combinations(range(g.m), g.n - 1):
        t1 = Graph(g.n, [g.edges[e] for e in tree_edges])
        if not is_connected(t1):
            continue
        rest = [g.edges[e] for e in range(g.m) if e not in tree_edges]
        if is_connected(Graph(g.n, rest)):
            return True
    return False


def test_matches_bruteforce_small():
    for g in connected_atlas(5):
        want = _has_packing_bruteforce(g)
        try:
            pair = edge_disjoint_spanning_trees(g)
            _assert_valid_pair(g, pair)
            got = True
        except InfeasibleError:
            got = False
        assert got == want


def test_every_four_edge_connected_graph_packs():
    for g in connected_atlas(7):
        if edge_connectivity_at_least(g, 4):
            _assert_valid_pair(g, edge_disjoint_spanning_trees(g))
