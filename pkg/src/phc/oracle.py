"""Ground-truth brute-force solvers.

Everything here answers by exhaustive search with exact pruning: the
connected mod-d factor solver (with per-edge capacities), PHC_z
existence, all-roundness / bipartite all-roundness classification, and
a Hamiltonian cycle backtracker. These are the references the
polynomial constructions are validated against, so they never
approximate: a budget overrun is an error, not a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._search import BUDGET, FOUND, run_search
from .errors import BudgetExceededError, PreconditionError
from .graph import Bipartition, Graph, bipartition_or_odd_cycle, is_connected

DEFAULT_BUDGET = 1 << 26


def solve_mod_d_factor(
    g: Graph,
    f,
    d: int = 4,
    caps=3,
    *,
    connected: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> list[int] | None:
    """Lexicographically smallest x with incident sums = f(v) mod d,
    x_e <= caps(e), and connected spanning support; None when none exists.

    caps may be a single int or a per-edge sequence. The answer is
    exhaustively certified; a search budget overrun raises instead of
    guessing.
    """
    residues = _check_residues(g, f, d)
    if isinstance(caps, int):
        cap_list = [caps] * g.m
    else:
        cap_list = [int(c) for c in caps]
        if len(cap_list) != g.m:
            raise ValueError("need one capacity per edge")
    if any(c < 0 for c in cap_list):
        raise ValueError("capacities must be nonnegative")
    if g.m == 0:
        ok = all(r == 0 for r in residues) and (not connected or g.n == 1)
        return [] if ok else None
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    status, x, _nodes = run_search(
        g.n, g.m, eu, ev, cap_list, residues, d, budget, connected
    )
    if status == BUDGET:
        raise BudgetExceededError(f"search exceeded {budget} states")
    return x if status == FOUND else None


def _check_residues(g: Graph, f, d: int) -> list[int]:
    if d < 2:
        raise ValueError("modulus must be at least 2")
    res = [int(r) for r in f]
    if len(res) != g.n:
        raise ValueError(f"need one residue per vertex, got {len(res)} for n={g.n}")
    if any(not 0 <= r < d for r in res):
        raise ValueError(f"residues must lie in 0..{d - 1}")
    return res


def phc_exists(g: Graph, z: int, *, budget: int = DEFAULT_BUDGET) -> tuple[bool, list[int] | None]:
    """Does g contain a PHC using each edge at most z times?

    Same search as solve_mod_d_factor with d=4, f=2, caps=z; returns the
    witness vector when one exists.
    """
    x = solve_mod_d_factor(g, [2] * g.n, 4, z, budget=budget)
    return (x is not None), x


@dataclass(frozen=True)
class RoundnessReport:
    """Outcome of an all-roundness sweep; witness is the first target
    map (lexicographically) with no connected factor."""

    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def all_round(g: Graph, *, budget: int = DEFAULT_BUDGET) -> RoundnessReport:
    """Exhaustively test: does every even-sum target map admit a
    connected mod-4 factor with entries <= 3?"""
    for f in _even_sum_maps(g.n):
        if solve_mod_d_factor(g, f, 4, 3, budget=budget) is None:
            return RoundnessReport(False, tuple(f))
    return RoundnessReport(True)


def bipartite_all_round(g: Graph, *, budget: int = DEFAULT_BUDGET) -> RoundnessReport:
    """Exhaustively test the bipartite analogue: every target map whose
    side sums agree mod 4 admits a connected mod-4 factor."""
    coloring = bipartition_or_odd_cycle(g)
    if not isinstance(coloring, Bipartition):
        raise PreconditionError("bipartite_all_round needs a bipartite graph")
    side = coloring.side
    for f in _even_sum_maps(g.n):
        bal = sum(r for v, r in enumerate(f) if side[v] == 0) - sum(
            r for v, r in enumerate(f) if side[v] == 1
        )
        if bal % 4 != 0:
            continue
        if solve_mod_d_factor(g, f, 4, 3, budget=budget) is None:
            return RoundnessReport(False, tuple(f))
    return RoundnessReport(True)


def _even_sum_maps(n: int):
    """All f in {0..3}^n with even total, in lexicographic order."""
    f = [0] * n
    while True:
        if sum(f) % 2 == 0:
            yield f
        i = n - 1
        while i >= 0 and f[i] == 3:
            f[i] = 0
            i -= 1
        if i < 0:
            return
        f[i] += 1


def hamiltonian_cycle(g: Graph) -> list[int] | None:
    """First Hamiltonian cycle in lexicographic vertex order (starting at
    0, second vertex smaller than the last), or None after exhaustive
    backtracking. Returns the closed vertex sequence 0 .. 0."""
    n = g.n
    if n == 1:
        return None
    if n == 2 or not is_connected(g):
        return None
    used = bytearray(n)
    used[0] = 1
    path = [0]

    def extend() -> bool:
        v = path[-1]
        if len(path) == n:
            return g.has_edge(v, 0) and path[1] < v
        for w, _eid in g.adj[v]:
            if not used[w]:
                used[w] = 1
                path.append(w)
                if extend():
                    return True
                path.pop()
                used[w] = 0
        return False

    if extend():
        return path + [0]
    return None
