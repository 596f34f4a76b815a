"""Backtracking core for the brute-force factor oracle.

Flat, array-based depth-first search written in the numba-compatible
subset of Python. When numba is importable the function is jitted (and
disk-cached); otherwise the same code runs as plain Python, just slower.

Search order is fixed by contract: edges in id order, values ascending,
so the first solution found is the lexicographically smallest. Pruning
is exact: a branch is cut only when no completion can satisfy the
residue, isolation, or connectivity constraints.
"""

from __future__ import annotations

import numpy as np

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


def _search_impl(n, m, eu, ev, caps, f, d, budget, need_connected):  # pragma: no cover - jitted
    x = np.zeros(m, dtype=np.int64)
    sums = np.zeros(n, dtype=np.int64)

    # last edge position incident to each vertex; -1 = isolated in G
    last = np.full(n, -1, dtype=np.int64)
    for j in range(m):
        if last[eu[j]] < j:
            last[eu[j]] = j
        if last[ev[j]] < j:
            last[ev[j]] = j

    if need_connected and n > 1:
        for v in range(n):
            if last[v] < 0:
                return EXHAUSTED, x, 0  # an isolated vertex can never be spanned

    # vertices completed at each edge position, as a flattened list
    comp_cnt = np.zeros(m, dtype=np.int64)
    for v in range(n):
        if last[v] >= 0:
            comp_cnt[last[v]] += 1
    comp_start = np.zeros(m + 1, dtype=np.int64)
    for j in range(m):
        comp_start[j + 1] = comp_start[j] + comp_cnt[j]
    comp_list = np.zeros(comp_start[m], dtype=np.int64)
    fill = comp_start[:m].copy()
    for v in range(n):
        if last[v] >= 0:
            comp_list[fill[last[v]]] = v
            fill[last[v]] += 1

    parent = np.zeros(n, dtype=np.int64)
    nodes = 0
    j = 0
    x[0] = -1
    while j >= 0:
        prev = x[j]
        if prev >= 0:
            sums[eu[j]] -= prev
            sums[ev[j]] -= prev
        x[j] += 1
        if x[j] > caps[j]:
            x[j] = -1
            j -= 1
            continue
        nodes += 1
        if nodes > budget:
            return BUDGET, x, nodes
        sums[eu[j]] += x[j]
        sums[ev[j]] += x[j]

        ok = True
        completed = comp_start[j] != comp_start[j + 1]
        for t in range(comp_start[j], comp_start[j + 1]):
            v = comp_list[t]
            if sums[v] % d != f[v]:
                ok = False
                break
            if need_connected and n > 1 and sums[v] == 0:
                ok = False
                break
        if ok and completed and need_connected and n > 1 and j < m - 1:
            # optimistic connectivity: even using every undecided edge,
            # can the support still become one spanning component?
            for v in range(n):
                parent[v] = v
            for t in range(m):
                if t <= j and x[t] == 0:
                    continue
                a = eu[t]
                b = ev[t]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
            comps = 0
            for v in range(n):
                if parent[v] == v:
                    comps += 1
            if comps > 1:
                ok = False
        if not ok:
            continue

        if j == m - 1:
            if need_connected and n > 1:
                for v in range(n):
                    parent[v] = v
                for t in range(m):
                    if x[t] > 0:
                        a = eu[t]
                        b = ev[t]
                        while parent[a] != a:
                            parent[a] = parent[parent[a]]
                            a = parent[a]
                        while parent[b] != b:
                            parent[b] = parent[parent[b]]
                            b = parent[b]
                        if a != b:
                            parent[a] = b
                comps = 0
                for v in range(n):
                    if parent[v] == v:
                        comps += 1
                if comps != 1:
                    continue
            return FOUND, x, nodes
        j += 1
        x[j] = -1
    return EXHAUSTED, x, nodes


try:  # pragma: no cover - exercised indirectly
    from numba import njit

    search = njit(cache=True)(_search_impl)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    search = _search_impl
    HAVE_NUMBA = False


def run_search(n, m, eu, ev, caps, f, d, budget, need_connected):
    """Typed wrapper around the (possibly jitted) core."""
    status, x, nodes = search(
        np.int64(n),
        np.int64(m),
        np.asarray(eu, dtype=np.int64),
        np.asarray(ev, dtype=np.int64),
        np.asarray(caps, dtype=np.int64),
        np.asarray(f, dtype=np.int64),
        np.int64(d),
        np.int64(budget),
        need_connected,
    )
    return int(status), [int(v) for v in x], int(nodes)
