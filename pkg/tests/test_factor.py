"""Mod-4 factor machinery: feasibility, construction, small solver,
reconnection, the four-edge-connected PHC_3 route, and ear shifts."""

from __future__ import annotations

import itertools

import pytest

from conftest import bowtie, build, complete, connected_atlas, cycle, octahedron
from phc.errors import InfeasibleError, PreconditionError
from phc.factor import (
    ParityTarget,
    ear_shift,
    f_feasible,
    format_target,
    mod4_f_factor,
    parse_target,
    phc3_4ec,
    reconnect,
    shift_leaving_few_zeros,
    small_connected_factor,
)
from phc.oracle import solve_mod_d_factor
from phc.parity import incidence_sums, support_components, verify_mod_factor, verify_phc


def test_target_parsing():
    g = cycle(4)
    t = parse_target("0 2\n2 0\n", g)
    assert t.residues == (2, 2, 0, 2)
    t2 = parse_target(format_target(t), g, default=0)
    assert t2 == t
    with pytest.raises(ValueError):
        parse_target("9 1\n", g)
    with pytest.raises(ValueError):
        ParityTarget((4, 0), 4)


def test_f_feasible():
    assert f_feasible(complete(3), [2, 2, 2])
    assert f_feasible(cycle(4), [2, 2, 2, 2])
    assert not f_feasible(cycle(4), [2, 0, 0, 0])
    assert not f_feasible(complete(3), [1, 0, 0])
    assert f_feasible(complete(3), [1, 1, 0])


def test_mod4_f_factor_examples():
    k3 = complete(3)
    assert mod4_f_factor(k3, [0, 0, 0]) == [0, 0, 0]
    x = mod4_f_factor(k3, [2, 2, 2])
    sums = incidence_sums(k3, x)
    assert all(s % 4 == 2 for s in sums) and max(x) <= 3
    c5 = cycle(5)
    assert mod4_f_factor(c5, [2] * 5) == [1, 1, 1, 1, 1]


def test_mod4_f_factor_residues_exhaustive():
    for g in connected_atlas(5):
        if g.m == 0:
            continue
        for f in itertools.product(range(4), repeat=g.n):
            if not f_feasible(g, list(f)):
                continue
            x = mod4_f_factor(g, list(f))
            assert all(0 <= v <= 3 for v in x)
            sums = incidence_sums(g, x)
            assert all(sums[v] % 4 == f[v] for v in range(g.n))


def test_small_connected_factor_k3_all_maps():
    k3 = complete(3)
    count = 0
    for f in itertools.product(range(4), repeat=3):
        if sum(f) % 2:
            continue
        count += 1
        x = small_connected_factor(k3, list(f))
        assert verify_mod_factor(k3, x, list(f), 4, 3)
    assert count == 32


def test_small_connected_factor_c6_balanced_maps():
    c6 = cycle(6)
    sides = [0, 1, 0, 1, 0, 1]
    solved = 0
    for f in itertools.product(range(4), repeat=6):
        bal = sum(r if sides[v] == 0 else -r for v, r in enumerate(f))
        if bal % 4:
            continue
        solved += 1
        x = small_connected_factor(c6, list(f))
        assert verify_mod_factor(c6, x, list(f), 4, 3)
    assert solved == 4 ** 6 // 4


def test_small_connected_factor_c5_counterexample():
    c5 = cycle(5)
    with pytest.raises(InfeasibleError):
        small_connected_factor(c5, [0, 0, 2, 0, 2])


def test_small_connected_factor_bound():
    with pytest.raises(PreconditionError):
        small_connected_factor(complete(6), [2] * 6)


def test_small_connected_factor_isomorphism_cache_consistency():
    # two labelings of the same graph get equivalent (remapped) answers
    g1 = build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    g2 = build(4, [(0, 2), (2, 1), (1, 3), (0, 3)])
    x1 = small_connected_factor(g1, [2, 2, 2, 2])
    x2 = small_connected_factor(g2, [2, 2, 2, 2])
    assert verify_mod_factor(g1, x1, [2] * 4, 4, 3)
    assert verify_mod_factor(g2, x2, [2] * 4, 4, 3)


def test_reconnect_two_triangles_sharing_vertex():
    g = bowtie()
    f = [2] * 5
    # factor split across the two triangles: supports do not meet
    x = [0] * g.m
    x[g.edge_id(0, 1)] = 1
    x[g.edge_id(0, 2)] = 1
    x[g.edge_id(1, 2)] = 1
    x[g.edge_id(3, 4)] = 2
    assert len(support_components(g, x)) == 2
    from phc.certify import subgraph_certificate

    cert = subgraph_certificate(
        g, [g.edge_id(2, 3), g.edge_id(2, 4), g.edge_id(3, 4)]
    )
    y = reconnect(g, x, f, cert)
    assert len(support_components(g, y)) == 1
    assert verify_mod_factor(g, y, f, 4, 3)


def test_reconnect_identity_when_connected():
    k3 = complete(3)
    x = [1, 1, 1]
    assert reconnect(k3, x, [2, 2, 2], None) == x


def test_phc3_4ec_examples():
    for g in (complete(5), complete(6), octahedron()):
        x = phc3_4ec(g)
        assert max(x) <= 3
        assert verify_phc(g, x, 3)


def test_phc3_4ec_preconditions():
    with pytest.raises(PreconditionError):
        phc3_4ec(cycle(4))


def test_ear_shift_values():
    assert ear_shift((0, 1, 2), 1) == (1, 0, 3)
    assert ear_shift((0, 1, 2), 2) == (2, 3, 0)
    # shifting by 2 is the same alternating or not
    assert ear_shift((0, 1, 2, 3), 2) == tuple((v + 2) % 4 for v in (0, 1, 2, 3))


def test_ear_shift_preserves_interior_sums():
    x = (3, 1, 0, 2, 1)
    for a in range(4):
        y = ear_shift(x, a)
        for i in range(len(x) - 1):
            assert (y[i] + y[i + 1]) % 4 == (x[i] + x[i + 1]) % 4


def test_shift_pigeonhole_short():
    for length in range(1, 4):
        for x in itertools.product(range(4), repeat=length):
            assert shift_leaving_few_zeros(x, allowed=(0, 2)) is not None


def test_shift_pigeonhole_long():
    for length in range(1, 8):
        for x in itertools.product(range(4), repeat=length):
            assert shift_leaving_few_zeros(x) is not None


def test_shift_pigeonhole_fails_beyond_seven():
    # at length 8 the zero-producing shifts can cover {0,1,2,3} twice over,
    # so every shift leaves two zeros: the length bound is tight
    x = (0, 0, 3, 1, 2, 2, 1, 3)
    for a in range(4):
        assert sum(1 for v in ear_shift(x, a) if v == 0) == 2
    assert shift_leaving_few_zeros(x) is None


def test_small_factor_matches_oracle_existence():
    for g in connected_atlas(5):
        if g.m == 0 or g.m > 12:
            continue
        for f in ([2] * g.n, [0] * g.n, [1] * g.n if g.n % 2 == 0 else [2] * g.n):
            oracle_x = solve_mod_d_factor(g, f, 4, 3)
            try:
                mine = small_connected_factor(g, f)
                got = True
            except InfeasibleError:
                got = False
            assert got == (oracle_x is not None)
            if got:
                assert verify_mod_factor(g, mine, f, 4, 3)
