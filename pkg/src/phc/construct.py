"""Polynomial PHC constructions: decide existence, build a PHC_4 edge
vector, and build S-odd walk vectors.

Existence: a connected graph has a PHC exactly when its order is even
or it is non-bipartite. The constructions run in time dominated by one
T-join plus one odd-cycle search, and their outputs stay within
multiplicity 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import counters
from .errors import InfeasibleError
from .graph import Bipartition, Graph, OddCycle, bipartition_or_odd_cycle, is_connected
from .parity import t_join


@dataclass(frozen=True)
class Decision:
    """Yes/no plus the reason tag.

    Reasons: "even-order" and "non-bipartite" for yes; "disconnected"
    and "bipartite-odd-order" for no.
    """

    has_phc: bool
    reason: str

    def __bool__(self) -> bool:
        return self.has_phc


def decide_phc(g: Graph) -> Decision:
    """Decide PHC existence.

    A single vertex has no PHC (the empty walk visits it zero times,
    which is even); it falls under the bipartite-odd-order rule.
    """
    if not is_connected(g):
        return Decision(False, "disconnected")
    if g.n % 2 == 0:
        return Decision(True, "even-order")
    if isinstance(bipartition_or_odd_cycle(g), Bipartition):
        return Decision(False, "bipartite-odd-order")
    return Decision(True, "non-bipartite")


def construct_phc4(g: Graph) -> list[int]:
    """Multiplicity vector of a PHC using each edge at most four times.

    Even order: 2 on a V-join, 4 elsewhere. Odd non-bipartite order:
    take an odd cycle C and a (V minus V(C))-join J, start from 2 on J /
    4 elsewhere, add 1 along C, and rewrite the resulting 5s to 1. All
    entries land in {1, 2, 3, 4}.
    """
    decision = decide_phc(g)
    if not decision:
        raise InfeasibleError(decision.reason, f"no PHC exists: {decision.reason}")
    steps = 0
    if g.n % 2 == 0:
        join = t_join(g, range(g.n))
        x = [4] * g.m
        for eid in join:
            x[eid] = 2
        steps = g.m
    else:
        cyc = bipartition_or_odd_cycle(g)
        assert isinstance(cyc, OddCycle)
        on_cycle = bytearray(g.m)
        for i, a in enumerate(cyc.vertices):
            on_cycle[g.edge_id(a, cyc.vertices[(i + 1) % len(cyc.vertices)])] = 1
        in_cycle_v = bytearray(g.n)
        for a in cyc.vertices:
            in_cycle_v[a] = 1
        join = t_join(g, [v for v in range(g.n) if not in_cycle_v[v]])
        x = [4] * g.m
        for eid in join:
            x[eid] = 2
        for eid in range(g.m):
            if on_cycle[eid]:
                x[eid] += 1
                if x[eid] == 5:
                    x[eid] = 1
        steps = g.m + len(cyc.vertices)
    counters.bump("construct_steps", steps)
    return x


def construct_s_odd(g: Graph, s) -> list[int]:
    """Edge vector of a closed walk visiting exactly the vertices of s an
    odd number of times, each edge used at most four times.

    Even |s|: 2 on an s-join, 4 elsewhere. Odd |s| (needs an odd cycle
    C): with T = (s minus V(C)) union (V(C) minus s) and J a T-join, an
    edge gets 2/3/4/1 according to (in J, on C) membership.
    """
    if not is_connected(g):
        raise InfeasibleError("disconnected", "S-odd walks need a connected graph")
    s_set = set(s)
    for v in s_set:
        if not 0 <= v < g.n:
            raise ValueError(f"S-vertex {v} out of range")
    if len(s_set) % 2 == 0:
        join = t_join(g, s_set)
        x = [4] * g.m
        for eid in join:
            x[eid] = 2
        return x
    coloring = bipartition_or_odd_cycle(g)
    if isinstance(coloring, Bipartition):
        raise InfeasibleError(
            "bipartite-odd-s", "bipartite graph with |S| odd has no S-odd walk"
        )
    cyc_v = set(coloring.vertices)
    on_cycle = bytearray(g.m)
    verts = coloring.vertices
    for i, a in enumerate(verts):
        on_cycle[g.edge_id(a, verts[(i + 1) % len(verts)])] = 1
    t = (s_set - cyc_v) | (cyc_v - s_set)
    join = set(t_join(g, t))
    x = [0] * g.m
    for eid in range(g.m):
        if eid in join:
            x[eid] = 3 if on_cycle[eid] else 2
        else:
            x[eid] = 1 if on_cycle[eid] else 4
    return x
