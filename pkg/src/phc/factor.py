"""Connected mod-4 factor machinery.

A mod-4 factor for a target map f assigns each edge a multiplicity in
{0,1,2,3} so that every vertex's incident sum hits f(v) mod 4; it is
connected when the positive edges span and connect all vertices. The
PHC_3 problem is the constant target f = 2.

This module holds the target type, feasibility tests, the T-join-based
(possibly disconnected) factor construction, the exhaustive small-graph
connected-factor solver used to rewire certificates, the component
reconnection step, the four-edge-connected PHC_3 construction, and the
alternating shift helpers for ear arguments.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .construct import decide_phc
from .errors import ContractViolationError, InfeasibleError, PreconditionError
from .graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    edge_connectivity_at_least,
    edge_subgraph,
    is_connected,
)
from .parity import incidence_sums, support_components, t_join, verify_phc
from .trees import edge_disjoint_spanning_trees


@dataclass(frozen=True)
class ParityTarget:
    """Per-vertex residue targets f: V -> {0..modulus-1}."""

    residues: tuple[int, ...]
    modulus: int = 4

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        for r in self.residues:
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue {r} out of range for modulus {self.modulus}")

    @classmethod
    def constant(cls, n: int, value: int, modulus: int = 4) -> "ParityTarget":
        return cls((value,) * n, modulus)

    def __len__(self) -> int:
        return len(self.residues)


def target_residues(g: Graph, f, modulus: int = 4) -> list[int]:
    """Normalize a ParityTarget or plain sequence against a host graph."""
    if isinstance(f, ParityTarget):
        if f.modulus != modulus:
            raise ValueError(f"target has modulus {f.modulus}, expected {modulus}")
        res = list(f.residues)
    else:
        res = [int(r) for r in f]
        for r in res:
            if not 0 <= r < modulus:
                raise ValueError(f"residue {r} out of range for modulus {modulus}")
    if len(res) != g.n:
        raise ValueError(f"target length {len(res)} != vertex count {g.n}")
    return res


def parse_target(text: str, g: Graph, default: int = 2) -> ParityTarget:
    """Parse lines "v r" with r in 0..3; unmentioned vertices get the
    default residue 2 (the PHC target)."""
    residues = [default] * g.n
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"target line must be 'v r', got {line!r}")
        v, r = int(parts[0]), int(parts[1])
        if not 0 <= v < g.n:
            raise ValueError(f"target vertex {v} out of range")
        residues[v] = r
    return ParityTarget(tuple(residues))


def format_target(f: ParityTarget) -> str:
    return "\n".join(f"{v} {r}" for v, r in enumerate(f.residues)) + "\n"


def f_feasible(g: Graph, f) -> bool:
    """Necessary parity conditions for a mod-4 factor: even total, and on
    bipartite graphs the two side sums must agree mod 4 (which implies
    the even total)."""
    res = target_residues(g, f)
    coloring = bipartition_or_odd_cycle(g)
    if isinstance(coloring, Bipartition):
        bal = sum(r if coloring.side[v] == 0 else -r for v, r in enumerate(res))
        return bal % 4 == 0
    return sum(res) % 2 == 0


def mod4_f_factor(g: Graph, f) -> list[int]:
    """Mod-4 factor with entries in {0..3}; the support may be
    disconnected.

    Unit weights on a join of the odd-residue vertices fix the odd part;
    a second join with weight 2 fixes the leftover 2-residues, detouring
    through an odd cycle when their count is odd (only possible on
    non-bipartite graphs).
    """
    res = target_residues(g, f)
    if not is_connected(g):
        raise PreconditionError("mod4_f_factor requires a connected graph")
    if not f_feasible(g, res):
        raise InfeasibleError("infeasible-target", "target map fails the parity conditions")
    odd = [v for v in range(g.n) if res[v] % 2 == 1]
    x = [0] * g.m
    for eid in t_join(g, odd):
        x[eid] = 1
    leftover = _two_residue_vertices(g, x, res)
    if len(leftover) % 2 == 1:
        coloring = bipartition_or_odd_cycle(g)
        if not isinstance(coloring, OddCycle):
            raise ContractViolationError(
                "odd leftover set on a bipartite graph despite feasible target"
            )
        verts = coloring.vertices
        for i, a in enumerate(verts):
            x[g.edge_id(a, verts[(i + 1) % len(verts)])] += 1
        leftover = _two_residue_vertices(g, x, res)
        if len(leftover) % 2 == 1:
            raise ContractViolationError("odd-cycle correction kept the leftover count odd")
    for eid in t_join(g, leftover):
        x[eid] = (x[eid] + 2) % 4
    sums = incidence_sums(g, x)
    if any(sums[v] % 4 != res[v] for v in range(g.n)):
        raise ContractViolationError("mod-4 factor construction missed its residues")
    return x


def _two_residue_vertices(g: Graph, x, res) -> list[int]:
    sums = incidence_sums(g, x)
    out = []
    for v in range(g.n):
        r = (res[v] - sums[v]) % 4
        if r == 2:
            out.append(v)
        elif r != 0:
            raise ContractViolationError("join step left an odd residue behind")
    return out


# ---------------------------------------------------------------------------
# exhaustive connected factors on small graphs

_SMALL_CACHE: dict[tuple, tuple[int, ...] | None] = {}
_SMALL_LOCK = threading.Lock()

DEFAULT_SMALL_EDGE_BOUND = 12


def small_connected_factor(
    h: Graph, f_h, cap: int = 3, *, max_edges: int = DEFAULT_SMALL_EDGE_BOUND
) -> list[int]:
    """Connected mod-4 factor of a small graph by exhaustive search.

    Deterministic: the search runs in canonical coordinates (so results
    are memoized across isomorphic copies) taking the lexicographically
    smallest solution there, and is mapped back to the caller's edge
    order. Raises InfeasibleError when no connected factor exists, which
    signals that a certificate kind was wrong.
    """
    res = target_residues(h, f_h)
    if h.m > max_edges:
        raise PreconditionError(
            f"small_connected_factor is limited to {max_edges} edges, got {h.m}"
        )
    key, order = _canonical_form(h, res)
    cache_key = (key, cap)
    with _SMALL_LOCK:
        hit = cache_key in _SMALL_CACHE
        value = _SMALL_CACHE.get(cache_key)
    if not hit:
        canon_edges, canon_res = key[1], key[2]
        canon_graph = Graph(h.n, canon_edges)
        value = _connected_factor_search(canon_graph, list(canon_res), cap)
        value = tuple(value) if value is not None else None
        with _SMALL_LOCK:
            _SMALL_CACHE.setdefault(cache_key, value)
    if value is None:
        raise InfeasibleError(
            "no-connected-factor",
            "no connected mod-4 factor within the cap",
            witness=tuple(res),
        )
    # order[i] = position of vertex i in canonical labeling
    canon_graph_edges = key[1]
    canon_index = {e: i for i, e in enumerate(canon_graph_edges)}
    x = [0] * h.m
    for eid, (u, v) in enumerate(h.edges):
        cu, cv = order[u], order[v]
        if cu > cv:
            cu, cv = cv, cu
        x[eid] = value[canon_index[(cu, cv)]]
    return x


def _connected_factor_search(h: Graph, res, cap: int) -> list[int] | None:
    """Backtracking search for a connected mod-4 factor, values ascending
    (lexicographically smallest solution first)."""
    m, n = h.m, h.n
    if m == 0:
        return [] if n == 1 and res[0] == 0 else None
    last = [-1] * n
    for eid, (u, v) in enumerate(h.edges):
        last[u] = max(last[u], eid)
        last[v] = max(last[v], eid)
    if n > 1 and any(p < 0 for p in last):
        return None
    completes = [[] for _ in range(m)]
    for v in range(n):
        completes[last[v]].append(v)
    sums = [0] * n
    x = [0] * m

    def ok_after(j: int) -> bool:
        for v in completes[j]:
            if sums[v] % 4 != res[v]:
                return False
            if n > 1 and sums[v] == 0:
                return False
        return True

    def connected() -> bool:
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = n
        for eid, (u, v) in enumerate(h.edges):
            if x[eid] > 0:
                ra, rb = find(u), find(v)
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        return comps == 1

    def rec(j: int) -> bool:
        if j == m:
            return n == 1 or connected()
        u, v = h.edges[j]
        for val in range(cap + 1):
            x[j] = val
            sums[u] += val
            sums[v] += val
            if ok_after(j) and rec(j + 1):
                return True
            sums[u] -= val
            sums[v] -= val
        x[j] = 0
        return False

    return list(x) if rec(0) else None


# ---------------------------------------------------------------------------
# canonical labeling (isomorphism-invariant cache keys)

_CANON_CACHE: dict[tuple, tuple] = {}


def _canonical_form(h: Graph, colors) -> tuple[tuple, list[int]]:
    """Canonical key and vertex relabeling for a vertex-colored graph.

    The key is (n, canonical edge tuple, canonical color tuple); two
    colored graphs get equal keys iff they are isomorphic respecting
    colors. Branch-and-bound over greedy lexicographically minimal
    placements; fine up to ~10 vertices.
    """
    n = h.n
    base = tuple(colors)
    cache_key = (n, h.edges, base)
    hit = _CANON_CACHE.get(cache_key)
    if hit is not None:
        return hit  # type: ignore[return-value]
    masks = [0] * n
    for u, v in h.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    weight = [(base[v], len(h.adj[v])) for v in range(n)]
    best_code: list[tuple] | None = None
    best_perm: list[int] | None = None

    def rec(placed: list[int], placed_mask: int, code: list[tuple]) -> None:
        nonlocal best_code, best_perm
        i = len(placed)
        if i == n:
            if best_code is None or code < best_code:
                best_code = list(code)
                best_perm = list(placed)
            return
        entries = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            bits = 0
            for j, u in enumerate(placed):
                if masks[v] >> u & 1:
                    bits |= 1 << j
            entries.append(((weight[v], bits), v))
        mn = min(e[0] for e in entries)
        code.append(mn)
        if best_code is not None and code > best_code[: len(code)]:
            code.pop()
            return
        for item, v in entries:
            if item == mn:
                placed.append(v)
                rec(placed, placed_mask | (1 << v), code)
                placed.pop()
        code.pop()

    rec([], 0, [])
    assert best_perm is not None
    order = [0] * n  # order[old] = canonical position
    for pos, v in enumerate(best_perm):
        order[v] = pos
    canon_edges = tuple(sorted(tuple(sorted((order[u], order[v]))) for u, v in h.edges))
    canon_colors = tuple(base[v] for v in best_perm)
    key = (n, canon_edges, canon_colors)
    result = (key, order)
    _CANON_CACHE[cache_key] = result
    return result


# ---------------------------------------------------------------------------
# component reconnection (certificate consumers)


def reconnect(g: Graph, x, f, cert) -> list[int]:
    """Splice a connected factor into a certified subgraph so the factor
    components meeting it merge into one.

    ``cert`` needs ``vertices`` and ``edge_ids`` in host labels. The
    incident sums mod 4 are preserved at every vertex; the components
    touching the certificate merge and all others stay intact. With a
    single component the input is returned unchanged.
    """
    res = target_residues(g, f)
    vec = list(x)
    comps = support_components(g, vec)
    if len(comps) <= 1:
        return vec
    comp_id = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = i
    touched = {comp_id[v] for v in cert.vertices}
    if len(touched) < 2:
        raise PreconditionError("certificate does not span two factor components")
    h, vmap, emap = edge_subgraph(g, cert.edge_ids)
    f_h = [0] * h.n
    for new_eid, old_eid in enumerate(emap):
        u, v = h.edges[new_eid]
        f_h[u] += vec[old_eid]
        f_h[v] += vec[old_eid]
    f_h = [s % 4 for s in f_h]
    try:
        y = small_connected_factor(h, f_h)
    except InfeasibleError as exc:
        raise ContractViolationError(
            f"certificate of kind {cert.kind!r} has no connected factor for its induced target"
        ) from exc
    for new_eid, old_eid in enumerate(emap):
        vec[old_eid] = y[new_eid]
    new_sums = incidence_sums(g, vec)
    if any(new_sums[v] % 4 != res[v] for v in range(g.n)):
        raise ContractViolationError("reconnect changed a residue")
    if len(support_components(g, vec)) >= len(comps):
        raise ContractViolationError("reconnect failed to reduce component count")
    return vec


# ---------------------------------------------------------------------------
# PHC_3 for four-edge-connected graphs


def phc3_4ec(g: Graph) -> list[int]:
    """PHC_3 vector for a four-edge-connected graph of even order or with
    an odd cycle.

    Double one spanning tree for connectivity, then repair parities with
    a join inside the second, edge-disjoint tree (adding an odd cycle
    first when the order is odd). Every edge ends at multiplicity <= 3.
    """
    if not edge_connectivity_at_least(g, 4):
        raise PreconditionError("phc3_4ec requires a four-edge-connected graph")
    decision = decide_phc(g)
    if not decision:
        raise InfeasibleError(decision.reason, f"no PHC exists: {decision.reason}")
    pair = edge_disjoint_spanning_trees(g)
    x = [0] * g.m
    deg_tree = [0] * g.n
    for eid in pair.tree_a:
        x[eid] = 2
        u, v = g.edges[eid]
        deg_tree[u] += 1
        deg_tree[v] += 1
    even_visit = {v for v in range(g.n) if deg_tree[v] % 2 == 0}
    if g.n % 2 == 1:
        coloring = bipartition_or_odd_cycle(g)
        assert isinstance(coloring, OddCycle)
        verts = coloring.vertices
        for i, a in enumerate(verts):
            x[g.edge_id(a, verts[(i + 1) % len(verts)])] += 1
        even_visit ^= set(verts)
    tree_b, _vmap, emap = edge_subgraph(g, pair.tree_b)
    join = t_join(tree_b, even_visit)
    for new_eid in join:
        x[emap[new_eid]] += 2
    if max(x) > 3:
        raise ContractViolationError("four-edge-connected construction exceeded cap 3")
    check = verify_phc(g, x, 3)
    if not check:
        raise ContractViolationError(
            f"four-edge-connected construction failed verification: {check.reason}"
        )
    return x


# ---------------------------------------------------------------------------
# alternating shifts for ear arguments


def ear_shift(x, a: int) -> tuple[int, ...]:
    """Alternating shift of a mod-4 assignment along an ear: positions
    1, 3, 5, ... (1-based) gain a, the rest lose a, mod 4. Interior
    vertices keep their incident sums; only the ear ends move."""
    out = []
    for i, v in enumerate(x):
        if i % 2 == 0:
            out.append((v + a) % 4)
        else:
            out.append((v - a) % 4)
    return tuple(out)


def shift_leaving_few_zeros(x, allowed=(0, 1, 2, 3), max_zeros: int = 1) -> int | None:
    """First shift amount whose image has at most max_zeros zero entries,
    or None. Pigeonhole: for len(x) <= 7 some a in {0..3} always works;
    for len(x) <= 3 some a in {0, 2} works."""
    for a in allowed:
        if sum(1 for v in ear_shift(x, a) if v == 0) <= max_zeros:
            return a
    return None
