"""PHC existence decisions and the PHC_4 / S-odd constructions."""

from __future__ import annotations

import itertools

import pytest

from conftest import build, complete, complete_bipartite, connected_atlas, cycle, path
from phc.construct import construct_phc4, construct_s_odd, decide_phc
from phc.errors import InfeasibleError
from phc.graph import Graph
from phc.parity import verify_phc, verify_s_odd


def test_decide_examples():
    assert decide_phc(complete(3)).reason == "non-bipartite"
    assert not decide_phc(path(3))
    assert decide_phc(path(3)).reason == "bipartite-odd-order"
    d = decide_phc(build(2, [(0, 1)]))
    assert d and d.reason == "even-order"
    assert decide_phc(build(4, [(0, 1), (2, 3)])).reason == "disconnected"
    assert decide_phc(Graph(1, [])).reason == "bipartite-odd-order"


def test_decide_prefers_even_order():
    # non-bipartite AND even order: the even-order branch wins
    assert decide_phc(complete(4)).reason == "even-order"


def test_phc4_single_edge():
    assert construct_phc4(build(2, [(0, 1)])) == [2]


def test_phc4_c5():
    g = cycle(5)
    x = construct_phc4(g)
    assert all(1 <= v <= 4 for v in x)
    assert verify_phc(g, x, 4)


def test_phc4_c4_matching():
    g = cycle(4)
    x = construct_phc4(g)
    assert sorted(x) == [2, 2, 4, 4]  # a perfect matching doubled, rest at 4
    assert verify_phc(g, x, 4)


def test_phc4_infeasible():
    with pytest.raises(InfeasibleError):
        construct_phc4(path(3))
    with pytest.raises(InfeasibleError):
        construct_phc4(Graph(1, []))


def test_phc4_entry_range_odd_case():
    # odd order, non-bipartite: entries stay within {1,2,3,4}
    for g in (complete(5), cycle(7), build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)])):
        x = construct_phc4(g)
        assert all(1 <= v <= 4 for v in x)
        assert verify_phc(g, x, 4)


def test_sodd_whole_vertex_set_is_phc():
    k3 = complete(3)
    x = construct_s_odd(k3, [0, 1, 2])
    assert verify_s_odd(k3, x, [0, 1, 2])
    assert verify_phc(k3, x, 4)


def test_sodd_empty_set():
    g = complete_bipartite(2, 3)
    x = construct_s_odd(g, [])
    assert all(v % 2 == 0 for v in x)
    assert verify_s_odd(g, x, [])


def test_sodd_all_but_one_on_p3():
    g = path(3)
    x = construct_s_odd(g, [0, 2])
    assert verify_s_odd(g, x, [0, 2])
    assert all(v <= 4 for v in x)


def test_sodd_infeasible():
    with pytest.raises(InfeasibleError):
        construct_s_odd(path(3), [1])


def test_sodd_exhaustive_n4():
    from phc.graph import Bipartition, bipartition_or_odd_cycle

    for g in connected_atlas(4):
        has_odd_cycle = not isinstance(bipartition_or_odd_cycle(g), Bipartition)
        for size in range(g.n + 1):
            for s in itertools.combinations(range(g.n), size):
                try:
                    x = construct_s_odd(g, s)
                    ok = True
                except InfeasibleError:
                    ok = False
                assert ok == (size % 2 == 0 or has_odd_cycle)
                if ok:
                    assert verify_s_odd(g, x, s)
                    assert all(v <= 4 for v in x)
