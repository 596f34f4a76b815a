"""Parity machinery: linear-time T-join, Eulerian realization of edge
multiplicity vectors, visit counting, and the verifiers that act as the
ground-truth contract for every construction.

A multiplicity vector x assigns each edge a nonnegative use count; the
pair (G, x) is the multigraph with x_e copies of edge e. A closed walk
realizes x when it uses each edge exactly x_e times. The parity-of-visits
view: a walk visits v odd-many times exactly when the incident sum of x
at v is 2 mod 4.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import counters
from .errors import ContractViolationError, InfeasibleError, PreconditionError
from .graph import Graph, is_connected


@dataclass(frozen=True)
class VerifyResult:
    """Boolean verdict plus the first failing condition and its witness."""

    ok: bool
    reason: str | None = None  # "parity" | "connectivity" | "cap"
    witness: int | None = None  # vertex for parity/connectivity, edge id for cap

    def __bool__(self) -> bool:
        return self.ok


def check_vector(g: Graph, x) -> list[int]:
    """Validate shape of a multiplicity vector; returns it as a list."""
    vec = list(x)
    if len(vec) != g.m:
        raise ValueError(f"vector length {len(vec)} != edge count {g.m}")
    for eid, val in enumerate(vec):
        if val != int(val) or val < 0:
            raise ValueError(f"multiplicity of edge {eid} must be a nonnegative integer")
    return [int(v) for v in vec]


def incidence_sums(g: Graph, x) -> list[int]:
    """Per-vertex sums of incident multiplicities."""
    sums = [0] * g.n
    for eid, (u, v) in enumerate(g.edges):
        sums[u] += x[eid]
        sums[v] += x[eid]
    return sums


def support_components(g: Graph, x) -> list[list[int]]:
    """Connected components of (G, x): vertices joined by positive-
    multiplicity edges; untouched vertices are singletons."""
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for eid, (u, v) in enumerate(g.edges):
        if x[eid] > 0:
            ra, rb = find(u), find(v)
            if ra != rb:
                parent[ra] = rb
    comps: dict[int, list[int]] = {}
    for v in range(g.n):
        comps.setdefault(find(v), []).append(v)
    return sorted(comps.values())


def t_join(g: Graph, t) -> list[int]:
    """Edge set J with odd degree exactly at the vertices of t.

    Depth-first search with a single exchange flag: the flag flips at
    every T-vertex, and a tree edge is toggled into J before and after
    its subtree, so it survives exactly when the subtree holds an odd
    number of T-vertices. Runs in O(n + m); works per component.

    Raises InfeasibleError when some component contains an odd number of
    T-vertices.
    """
    in_t = bytearray(g.n)
    for v in set(t):
        in_t[v] = 1
    color = bytearray(g.n)
    in_j = bytearray(g.m)
    flag = False
    ops = 0
    for root in range(g.n):
        if color[root]:
            continue
        color[root] = 1
        if in_t[root]:
            flag = not flag
        stack: list[list[int]] = [[root, 0, -1]]
        while stack:
            frame = stack[-1]
            v, idx = frame[0], frame[1]
            if idx < len(g.adj[v]):
                frame[1] += 1
                w, eid = g.adj[v][idx]
                ops += 1
                if not color[w]:
                    if flag:
                        in_j[eid] ^= 1
                    color[w] = 1
                    if in_t[w]:
                        flag = not flag
                    stack.append([w, 0, eid])
            else:
                stack.pop()
                if frame[2] >= 0 and flag:
                    in_j[frame[2]] ^= 1
        if flag:
            counters.bump("tjoin_edges", ops)
            raise InfeasibleError(
                "odd-t-component",
                f"component of vertex {root} contains an odd number of T-vertices",
            )
    counters.bump("tjoin_edges", ops)
    return [eid for eid in range(g.m) if in_j[eid]]


def multiplicities(g: Graph, walk) -> list[int]:
    """Edge count vector of a closed walk."""
    w = _check_walk(g, walk)
    x = [0] * g.m
    for i in range(len(w) - 1):
        x[g.edge_id(w[i], w[i + 1])] += 1
    return x


def visit_counts(g: Graph, walk) -> list[int]:
    """How many times each vertex is visited by a closed walk.

    The final repetition of the start vertex is not counted (v0 and the
    closing vl are the same visit), matching visit(v) = half the incident
    multiplicity sum.
    """
    w = _check_walk(g, walk)
    counts = [0] * g.n
    for v in w[:-1]:
        counts[v] += 1
    return counts


def _check_walk(g: Graph, walk) -> list[int]:
    w = list(walk)
    if not w:
        raise ValueError("a closed walk has at least one vertex")
    for v in w:
        if not 0 <= v < g.n:
            raise ValueError(f"walk vertex {v} out of range")
    if w[0] != w[-1]:
        raise ValueError("walk is not closed (first vertex != last)")
    for i in range(len(w) - 1):
        if not g.has_edge(w[i], w[i + 1]):
            raise ValueError(f"walk step {w[i]}-{w[i + 1]} is not an edge")
    return w


def euler_realize(g: Graph, x) -> list[int]:
    """Closed walk using edge e exactly x_e times (Hierholzer).

    Requires every vertex to have an even incident sum and the support of
    x to connect all vertices (a single vertex with the empty vector is
    the one degenerate exception). Starts at the lowest-index vertex with
    positive degree and always follows the smallest-id edge with copies
    left.
    """
    vec = check_vector(g, x)
    sums = incidence_sums(g, vec)
    for v, s in enumerate(sums):
        if s % 2:
            raise InfeasibleError("odd-degree", f"vertex {v} has odd multiplicity sum {s}")
    if all(val == 0 for val in vec):
        if g.n == 1:
            return [0]
        raise InfeasibleError("disconnected-support", "empty vector on n > 1 vertices")
    comps = support_components(g, vec)
    if len(comps) > 1:
        raise InfeasibleError(
            "disconnected-support",
            f"support does not connect all vertices (component of {comps[1][0]} is separate)",
        )
    remaining = list(vec)
    incident_by_eid = [
        sorted(eid for _, eid in g.adj[v]) for v in range(g.n)
    ]
    ptr = [0] * g.n
    start = min(v for v in range(g.n) if sums[v] > 0)
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        lst = incident_by_eid[v]
        i = ptr[v]
        while i < len(lst) and remaining[lst[i]] == 0:
            i += 1
        ptr[v] = i
        if i < len(lst):
            eid = lst[i]
            remaining[eid] -= 1
            a, b = g.edges[eid]
            stack.append(b if v == a else a)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if multiplicities(g, circuit) != vec:
        raise ContractViolationError("Hierholzer left edges unused on connected even input")
    return circuit


def verify_phc(g: Graph, x, cap: int | None = None) -> VerifyResult:
    """Does x admit a parity Hamiltonian cycle using each edge <= cap times?

    True iff (a) every vertex has incident sum = 2 mod 4, (b) the support
    spans and connects all vertices, and (c) every entry is <= cap (cap
    None means unbounded). The diagnosis names the first failing condition
    in that order.
    """
    vec = check_vector(g, x)
    sums = incidence_sums(g, vec)
    for v, s in enumerate(sums):
        if s % 4 != 2:
            return VerifyResult(False, "parity", v)
    comps = support_components(g, vec)
    if len(comps) > 1:
        return VerifyResult(False, "connectivity", comps[1][0])
    if cap is not None:
        for eid, val in enumerate(vec):
            if val > cap:
                return VerifyResult(False, "cap", eid)
    return VerifyResult(True)


def verify_mod_factor(g: Graph, x, residues, modulus: int = 4, cap: int | None = 3) -> VerifyResult:
    """Is x a connected mod-`modulus` factor hitting the given residues?

    Same condition order as verify_phc: residues first, then spanning
    connected support, then the per-edge cap.
    """
    vec = check_vector(g, x)
    res = [int(r) for r in residues]
    if len(res) != g.n:
        raise ValueError("need one residue per vertex")
    sums = incidence_sums(g, vec)
    for v, s in enumerate(sums):
        if s % modulus != res[v] % modulus:
            return VerifyResult(False, "parity", v)
    comps = support_components(g, vec)
    if len(comps) > 1:
        return VerifyResult(False, "connectivity", comps[1][0])
    if cap is not None:
        for eid, val in enumerate(vec):
            if val > cap:
                return VerifyResult(False, "cap", eid)
    return VerifyResult(True)


def verify_s_odd(g: Graph, x, s) -> bool:
    """Is x the edge count vector of an S-odd closed walk?

    Requires every incident sum even, sums = 2 mod 4 exactly on S and
    0 mod 4 elsewhere, and the positive-multiplicity edges to form a
    single connected piece (vertices the walk never visits are fine).
    """
    vec = check_vector(g, x)
    s_set = set(s)
    for v in s_set:
        if not 0 <= v < g.n:
            raise ValueError(f"S-vertex {v} out of range")
    sums = incidence_sums(g, vec)
    for v in range(g.n):
        want = 2 if v in s_set else 0
        if sums[v] % 4 != want:
            return False
    touched = [c for c in support_components(g, vec) if len(c) > 1 or sums[c[0]] > 0]
    return len(touched) <= 1


def parse_vector(text: str, g: Graph) -> list[int]:
    """Parse the text form: |E| integers in edge-list order."""
    toks = text.split()
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise ValueError("multiplicity vector must be whitespace-separated integers") from None
    return check_vector(g, vals)


def format_vector(x) -> str:
    return " ".join(str(int(v)) for v in x)


def parse_walk(text: str) -> list[int]:
    """Parse the walk text form: vertex ids, first = last."""
    return [int(t) for t in text.split()]


def format_walk(walk) -> str:
    return " ".join(str(v) for v in walk)


def parse_vertex_set(text: str, g: Graph) -> list[int]:
    """Whitespace-separated vertex ids, deduplicated and sorted."""
    vals = sorted({int(t) for t in text.split()})
    for v in vals:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return vals


def spanning_tree_doubled(g: Graph) -> list[int]:
    """Every-vertex-even walk vector: a BFS spanning tree traced twice."""
    if not is_connected(g):
        raise PreconditionError("spanning tree needs a connected graph")
    x = [0] * g.m
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, eid in g.adj[v]:
            if not seen[w]:
                seen[w] = 1
                x[eid] = 2
                queue.append(w)
    return x
