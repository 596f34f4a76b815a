"""Graph-class predicates: cubic, Pk-free, C>=k-free.

Exact answers by induced-subgraph search over adjacency bitmasks. Meant
for classifying a test corpus (n up to ~12); no attempt is made to be
fast beyond that.
"""

from __future__ import annotations

from .graph import Graph


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w, _ in g.adj[v]) for v in range(g.n)]


def is_cubic(g: Graph) -> bool:
    """True iff every vertex has degree exactly 3."""
    return all(g.degree(v) == 3 for v in range(g.n))


def has_induced_path(g: Graph, k: int) -> bool:
    """True iff g contains P_k (a path on k vertices) as an induced
    subgraph."""
    if k <= 0:
        return False
    if k == 1:
        return g.n >= 1
    if k == 2:
        return g.m >= 1
    masks = _adj_masks(g)

    def extend(last: int, used: int, depth: int) -> bool:
        if depth == k:
            return True
        middle = used & ~(1 << last)
        for w, _ in g.adj[last]:
            bit = 1 << w
            if used & bit or masks[w] & middle:
                continue
            if extend(w, used | bit, depth + 1):
                return True
        return False

    return any(extend(a, 1 << a, 1) for a in range(g.n))


def is_pk_free(g: Graph, k: int) -> bool:
    """True iff g has no induced P_k."""
    return not has_induced_path(g, k)


def has_induced_cycle_at_least(g: Graph, k: int) -> bool:
    """True iff g contains an induced (chordless) cycle of length >= k."""
    k = max(k, 3)
    masks = _adj_masks(g)

    def grow(s: int, last: int, used: int, length: int) -> bool:
        # extend an induced path rooted at s = min vertex of the cycle
        middle = used & ~(1 << last) & ~(1 << s)
        for w, _ in g.adj[last]:
            bit = 1 << w
            if w <= s or used & bit or masks[w] & middle:
                continue
            if masks[w] >> s & 1:
                if length + 1 >= k:
                    return True
                continue  # closes a short chordless cycle; cannot extend past it
            if grow(s, w, used | bit, length + 1):
                return True
        return False

    for s in range(g.n):
        for v1, _ in g.adj[s]:
            if v1 > s and grow(s, v1, (1 << s) | (1 << v1), 2):
                return True
    return False


def is_c_geq_k_free(g: Graph, k: int) -> bool:
    """True iff g has no induced cycle of length k or more."""
    return not has_induced_cycle_at_least(g, k)


def classify(g: Graph) -> dict[str, bool]:
    """Predicate bundle used by the CLI and the test corpus filters."""
    return {
        "cubic": is_cubic(g),
        "p4_free": is_pk_free(g, 4),
        "p5_free": is_pk_free(g, 5),
        "p6_free": is_pk_free(g, 6),
        "c_geq_4_free": is_c_geq_k_free(g, 4),
        "c_geq_5_free": is_c_geq_k_free(g, 5),
        "c_geq_6_free": is_c_geq_k_free(g, 6),
        "c_geq_7_free": is_c_geq_k_free(g, 7),
    }
