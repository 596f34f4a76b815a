"""Graph parsing and structural subroutines."""

from __future__ import annotations

import pytest

from conftest import (
    all_simple_cycles,
    build,
    bowtie,
    complete,
    connected_atlas,
    cycle,
    octahedron,
    path,
    petersen,
    theta,
    two_triangles_bridge,
)
from phc.errors import GraphFormatError, PreconditionError
from phc.graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    bridges_and_components,
    cycles_through_edge,
    ear_decomposition,
    edge_connectivity_at_least,
    edge_subgraph,
    induced_subgraph,
    is_connected,
    parse_graph,
    replay_ear_decomposition,
    shortest_cycle_through_edge,
    two_edge_connected,
)


# --- parsing ---------------------------------------------------------------

def test_parse_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0\n")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2), (0, 2))
    assert g.adj[0] == ((1, 0), (2, 2))


def test_parse_comments_and_whitespace():
    g = parse_graph("# a triangle\n 3 3 \n0 1  # first\n1 2\n0 2\n\n")
    assert g.m == 3


def test_parse_c4():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert g.n == 4 and g.m == 4


@pytest.mark.parametrize(
    "doc,kind",
    [
        ("2 1\n0 0\n", "self-loop"),
        ("3 2\n0 1\n0 1\n", "duplicate-edge"),
        ("3 2\n0 1\n1 0\n", "duplicate-edge"),
        ("2 1\n0 5\n", "bad-vertex"),
        ("2 1\n0\n", "malformed"),
        ("2 1\nx y\n", "malformed"),
        ("0 0\n", "bad-header"),
        ("2 2\n0 1\n", "bad-header"),
        ("nope\n", "bad-header"),
    ],
)
def test_parse_errors(doc, kind):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(doc)
    assert err.value.kind == kind


def test_single_vertex_allowed():
    assert parse_graph("1 0\n").n == 1


# --- connectivity ----------------------------------------------------------

def test_is_connected():
    assert is_connected(complete(3))
    assert not is_connected(build(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, []))


# --- bipartition / odd cycle ------------------------------------------------

def _assert_valid_odd_cycle(g: Graph, oc: OddCycle):
    verts = oc.vertices
    assert len(verts) % 2 == 1 and len(verts) >= 3
    assert len(set(verts)) == len(verts)
    for i, a in enumerate(verts):
        assert g.has_edge(a, verts[(i + 1) % len(verts)])


def test_bipartition_c4():
    out = bipartition_or_odd_cycle(cycle(4))
    assert isinstance(out, Bipartition)
    assert out.side == (0, 1, 0, 1)


def test_odd_cycle_k3():
    out = bipartition_or_odd_cycle(complete(3))
    assert isinstance(out, OddCycle)
    _assert_valid_odd_cycle(complete(3), out)


def test_odd_cycle_c6_with_short_chord():
    # chord {0,2} creates exactly two odd cycles: a triangle and a 5-cycle
    g = build(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)])
    odd = {c for c in all_simple_cycles(g) if len(c) % 2 == 1}
    assert {len(c) for c in odd} == {3, 5}
    out = bipartition_or_odd_cycle(g)
    assert isinstance(out, OddCycle)
    _assert_valid_odd_cycle(g, out)
    assert len(out.vertices) in (3, 5)


def test_long_chord_keeps_c6_bipartite():
    # chord {0,3} joins opposite sides, so the graph stays bipartite
    g = build(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    assert not any(len(c) % 2 for c in all_simple_cycles(g))
    assert isinstance(bipartition_or_odd_cycle(g), Bipartition)


def test_bipartition_requires_connected():
    with pytest.raises(PreconditionError):
        bipartition_or_odd_cycle(build(4, [(0, 1), (2, 3)]))


def test_bipartition_or_odd_cycle_exhaustive():
    for g in connected_atlas(6):
        out = bipartition_or_odd_cycle(g)
        if isinstance(out, Bipartition):
            assert all(out.side[u] != out.side[v] for u, v in g.edges)
        else:
            _assert_valid_odd_cycle(g, out)


# --- bridges ----------------------------------------------------------------

def test_bridges_path():
    dec = bridges_and_components(path(3))
    assert dec.bridges == (0, 1)
    assert dec.components == ()
    assert dec.isolated == (0, 1, 2)


def test_bridges_triangle():
    dec = bridges_and_components(complete(3))
    assert dec.bridges == () and dec.components == ((0, 1, 2),) and dec.isolated == ()


def test_bridges_two_triangles():
    g = two_triangles_bridge()
    dec = bridges_and_components(g)
    assert [g.edges[b] for b in dec.bridges] == [(2, 3)]
    assert dec.components == ((0, 1, 2), (3, 4, 5))


def test_bridges_exhaustive_small():
    for g in connected_atlas(6):
        dec = bridges_and_components(g)
        expected = set()
        for eid in range(g.m):
            rest = [e for i, e in enumerate(g.edges) if i != eid]
            if not is_connected(Graph(g.n, rest)):
                expected.add(eid)
        assert set(dec.bridges) == expected


# --- edge connectivity -------------------------------------------------------

def test_edge_connectivity_examples():
    assert edge_connectivity_at_least(complete(5), 4)
    assert edge_connectivity_at_least(cycle(4), 2)
    assert not edge_connectivity_at_least(cycle(4), 3)
    assert not edge_connectivity_at_least(path(3), 2)
    assert edge_connectivity_at_least(octahedron(), 4)


def test_edge_connectivity_matches_bruteforce():
    import itertools

    for g in connected_atlas(5):
        if g.m == 0:
            continue
        cut = g.m
        for k in range(1, g.m + 1):
            found = False
            for removed in itertools.combinations(range(g.m), k):
                rest = [e for i, e in enumerate(g.edges) if i not in removed]
                if not is_connected(Graph(g.n, rest)):
                    found = True
                    break
            if found:
                cut = k
                break
        for k in range(1, g.m + 2):
            assert edge_connectivity_at_least(g, k) == (cut >= k)


# --- cycles through edges ----------------------------------------------------

def test_shortest_cycle_through_edge():
    g = complete(4)
    cyc = shortest_cycle_through_edge(g, 0)
    assert cyc is not None and len(cyc) == 3
    assert shortest_cycle_through_edge(path(3), 0) is None


def test_cycles_through_edge_sorted():
    g = complete(4)
    cycs = list(cycles_through_edge(g, 0, 4))
    assert [len(c) for c in cycs] == [3, 3, 4, 4]
    for c in cycs:
        assert c[0] == 0 and c[-1] == 1


# --- ear decomposition --------------------------------------------------------

def test_ears_cycle_is_base_only():
    dec = ear_decomposition(cycle(5))
    assert len(dec.base) == 5 and dec.ears == ()


def test_ears_k4():
    g = complete(4)
    dec = ear_decomposition(g)
    assert len(dec.base) == 3
    assert sum(len(e) - 1 for e in dec.ears) == 3
    assert replay_ear_decomposition(g, dec) == set(range(g.m))


def test_ears_theta():
    g = theta()
    dec = ear_decomposition(g)
    assert len(dec.ears) == 1
    assert replay_ear_decomposition(g, dec) == set(range(g.m))


def test_ears_reject_bridges():
    with pytest.raises(PreconditionError):
        ear_decomposition(two_triangles_bridge())


def test_ears_closed_ear():
    g = bowtie()
    dec = ear_decomposition(g)
    assert replay_ear_decomposition(g, dec) == set(range(g.m))
    closed = [e for e in dec.ears if e[0] == e[-1]]
    assert len(closed) == 1 and len(closed[0]) == 4


def test_ears_exhaustive_replay():
    for g in connected_atlas(6):
        if g.m < 3 or not two_edge_connected(g):
            continue
        dec = ear_decomposition(g)
        assert replay_ear_decomposition(g, dec) == set(range(g.m))
        built = set(dec.base)
        for ear in dec.ears:
            assert len(ear) >= 2
            assert ear[0] in built and ear[-1] in built
            interior = ear[1:-1]
            assert all(v not in built for v in interior)
            assert len(set(interior)) == len(interior)
            built.update(ear)
        # deterministic: same input, same output
        assert ear_decomposition(g) == dec


def test_ears_explicit_base():
    g = petersen()
    base = (0, 1, 2, 3, 4)
    dec = ear_decomposition(g, base_cycle=base)
    assert dec.base == base
    assert replay_ear_decomposition(g, dec) == set(range(g.m))


# --- subgraph helpers ----------------------------------------------------------

def test_induced_subgraph():
    g = two_triangles_bridge()
    sub, vmap = induced_subgraph(g, [3, 4, 5])
    assert vmap == [3, 4, 5]
    assert sub.edges == ((0, 1), (0, 2), (1, 2))


def test_edge_subgraph():
    g = complete(4)
    sub, vmap, emap = edge_subgraph(g, [0, 3])  # edges (0,1) and (1,2)
    assert vmap == [0, 1, 2] and emap == [0, 3]
    assert sub.edges == ((0, 1), (1, 2))
