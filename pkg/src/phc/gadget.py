"""Hardness gadget: cubic Hamiltonicity as bounded-multiplicity PHC.

From a cubic graph G, build H by splitting every edge into a path of
length three and hanging a 4-cycle off every original vertex. A
Hamiltonian cycle of G translates into a PHC of H using each edge at
most twice, and any PHC of H with per-edge cap 2 or 3 collapses back to
a Hamiltonian cycle of G: subdivided paths can only carry (1,1,1),
(2,0,2) or (3,3,3), and the parity budget at an original vertex forces
exactly two of its three paths to carry the odd patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import is_cubic
from .errors import ContractViolationError, PreconditionError
from .graph import Graph, is_connected
from .parity import verify_phc


@dataclass(frozen=True)
class GadgetMap:
    """Host graph H plus the bookkeeping back to the source graph.

    path_edges[j] holds the H edge ids of the three-segment path that
    replaced source edge j, in order (u side, middle, v side);
    cycle_edges[v] holds the four H edge ids of the cycle attached to
    source vertex v.
    """

    source: Graph
    host: Graph
    path_edges: tuple[tuple[int, int, int], ...]
    cycle_edges: tuple[tuple[int, int, int, int], ...]


def build_gadget(g: Graph) -> GadgetMap:
    """Subdivide each edge into a 3-path and attach a 4-cycle per vertex.

    Requires a connected cubic graph. Host numbering: source vertices
    keep their ids, then the two subdivision vertices per edge in edge
    order, then the three cycle vertices per source vertex.
    """
    if not is_cubic(g):
        raise PreconditionError("gadget construction requires a cubic graph")
    if not is_connected(g):
        raise PreconditionError("gadget construction requires a connected graph")
    n, m = g.n, g.m
    edges: list[tuple[int, int]] = []
    path_edges = []
    for j, (u, v) in enumerate(g.edges):
        a = n + 2 * j
        b = n + 2 * j + 1
        base = len(edges)
        edges.extend([(u, a), (a, b), (b, v)])
        path_edges.append((base, base + 1, base + 2))
    cycle_edges = []
    for v in range(n):
        w1 = n + 2 * m + 3 * v
        base = len(edges)
        edges.extend([(v, w1), (w1, w1 + 1), (w1 + 1, w1 + 2), (v, w1 + 2)])
        cycle_edges.append((base, base + 1, base + 2, base + 3))
    host = Graph(n + 2 * m + 3 * n, edges)
    return GadgetMap(g, host, tuple(path_edges), tuple(cycle_edges))


def _hc_edge_set(g: Graph, hc) -> set[int]:
    """Validate a Hamiltonian cycle of g given as a vertex sequence
    (closed or open) and return its edge ids."""
    seq = list(hc)
    if len(seq) >= 2 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if sorted(seq) != list(range(g.n)) or g.n < 3:
        raise PreconditionError("not a Hamiltonian cycle: must visit every vertex once")
    eids = set()
    for i, a in enumerate(seq):
        b = seq[(i + 1) % len(seq)]
        if not g.has_edge(a, b):
            raise PreconditionError(f"not a Hamiltonian cycle: {a}-{b} is not an edge")
        eids.add(g.edge_id(a, b))
    return eids


def phc2_from_hc(gm: GadgetMap, hc) -> list[int]:
    """Translate a Hamiltonian cycle of the source into a cap-2 PHC
    vector on the host: cycle edges get (1,1,1), the rest (2,0,2), and
    every attachment cycle is traversed once."""
    on_cycle = _hc_edge_set(gm.source, hc)
    x = [0] * gm.host.m
    for j in range(gm.source.m):
        e1, e2, e3 = gm.path_edges[j]
        if j in on_cycle:
            x[e1] = x[e2] = x[e3] = 1
        else:
            x[e1], x[e2], x[e3] = 2, 0, 2
    for quad in gm.cycle_edges:
        for e in quad:
            x[e] = 1
    check = verify_phc(gm.host, x, 2)
    if not check:
        raise ContractViolationError(
            f"gadget forward translation failed verification: {check.reason}"
        )
    return x


_PATH_PATTERNS = {(1, 1, 1): True, (3, 3, 3): True, (2, 0, 2): False}


def hc_from_phc(gm: GadgetMap, x, z: int = 3) -> list[int]:
    """Extract a Hamiltonian cycle of the source from a verified host PHC
    with per-edge cap z (2 or 3).

    The selected source edges are those whose subdivided path carries an
    odd pattern; by the parity argument they always form a Hamiltonian
    cycle, so any failure here is an alarm, not an input error.
    """
    if z not in (2, 3):
        raise PreconditionError("gadget extraction is defined for caps 2 and 3")
    check = verify_phc(gm.host, x, z)
    if not check:
        raise PreconditionError(
            f"vector is not a cap-{z} PHC of the host: {check.reason} at {check.witness}"
        )
    chosen: set[int] = set()
    for j in range(gm.source.m):
        triple = tuple(x[e] for e in gm.path_edges[j])
        if triple not in _PATH_PATTERNS:
            raise ContractViolationError(
                f"subdivided path {j} carries impossible pattern {triple}"
            )
        if _PATH_PATTERNS[triple]:
            chosen.add(j)
    for v, quad in enumerate(gm.cycle_edges):
        vals = {x[e] for e in quad}
        if vals not in ({1}, {3}):
            raise ContractViolationError(
                f"attachment cycle at vertex {v} carries impossible values {sorted(vals)}"
            )
    return _edges_to_cycle(gm.source, chosen)


def _edges_to_cycle(g: Graph, eids: set[int]) -> list[int]:
    """Turn an edge set that should be a Hamiltonian cycle into a closed
    vertex sequence starting at 0 toward its smaller neighbor."""
    if len(eids) != g.n:
        raise ContractViolationError(
            f"extracted edge set has {len(eids)} edges, expected {g.n}"
        )
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for e in eids:
        u, v = g.edges[e]
        nbrs[u].append(v)
        nbrs[v].append(u)
    if any(len(a) != 2 for a in nbrs):
        raise ContractViolationError("extracted edge set is not 2-regular")
    for a in nbrs:
        a.sort()
    cycle = [0, nbrs[0][0]]
    while cycle[-1] != 0:
        prev, cur = cycle[-2], cycle[-1]
        nxt = nbrs[cur][1] if nbrs[cur][0] == prev else nbrs[cur][0]
        cycle.append(nxt)
    if len(cycle) != g.n + 1:
        raise ContractViolationError("extracted edge set is disconnected")
    return cycle


def format_gadget(gm: GadgetMap) -> str:
    """Annotated edge list of the host; parse_graph accepts it back."""
    lines = [f"{gm.host.n} {gm.host.m}"]
    lines.append(
        f"# gadget host of a {gm.source.n}-vertex {gm.source.m}-edge cubic graph"
    )
    notes: dict[int, str] = {}
    for j, trio in enumerate(gm.path_edges):
        u, v = gm.source.edges[j]
        for seg, e in enumerate(trio):
            notes[e] = f"path seg {seg} of source edge {j} = ({u},{v})"
    for v, quad in enumerate(gm.cycle_edges):
        for seg, e in enumerate(quad):
            notes[e] = f"attachment cycle seg {seg} of source vertex {v}"
    for eid, (u, v) in enumerate(gm.host.edges):
        lines.append(f"{u} {v}  # {notes[eid]}")
    return "\n".join(lines) + "\n"
