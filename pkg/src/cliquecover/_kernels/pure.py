"""Pure-Python kernels.

Reference implementations of the hot inner loops, used as the fallback
backend when the compiled extension is unavailable and as the baseline in
backend-comparison benchmarks.  Scan orders are pinned (vertices and
neighbours ascending) and must match the compiled kernels exactly: both
backends have to produce identical results, not merely equivalent ones.

All functions take adjacency in CSR form: ``indptr`` of length n+1 and
``indices`` holding the sorted neighbour lists back to back.
"""

from __future__ import annotations

from collections import deque


def _adjacency(n, indptr, indices):
    return [list(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]


def max_matching(n, indptr, indices):
    """Maximum cardinality matching (Edmonds blossom); returns the match
    array with -1 for exposed vertices.

    Greedy seeding first, then one augmenting-path search per remaining
    exposed vertex in ascending order; BFS with blossom contraction.
    """
    adj = _adjacency(n, indptr, indices)
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root):
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, curbase, to)
                    mark_path(to, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] == -1:
            v = find_path(root)
            while v != -1:
                pv = p[v]
                ppv = match[pv]
                match[v] = pv
                match[pv] = v
                v = ppv
    return match


def reduce_trace(n, indptr, indices):
    """Repeatedly find the first adjacent (dominator, witness) pair in
    ascending scan order and remove the dominator; returns (doms, wits)
    in removal order.  The scan restarts from vertex 0 after each removal,
    so the result equals iterating a from-scratch dominated-pair search."""
    adj = [set(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]
    alive = [True] * n
    doms: list[int] = []
    wits: list[int] = []
    while True:
        hit = None
        for x in range(n):
            if not alive[x] or not adj[x]:
                continue
            ax = adj[x]
            for y in sorted(ax):
                if all(w == x or w in ax for w in adj[y]):
                    hit = (x, y)
                    break
            if hit:
                break
        if hit is None:
            return doms, wits
        x, y = hit
        doms.append(x)
        wits.append(y)
        alive[x] = False
        for w in adj[x]:
            adj[w].discard(x)
        adj[x] = set()


def find_triangle(n, indptr, indices):
    """First triangle (u, v, w) with u < v < w in lexicographic scan order,
    or None if the graph is triangle-free."""
    adj = _adjacency(n, indptr, indices)
    sets = [frozenset(a) for a in adj]
    for u in range(n):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[v]:
                if w > v and w in sets[u]:
                    return (u, v, w)
    return None


def find_c4(n, indptr, indices):
    """First induced 4-cycle in scan order, returned in cycle order
    (u, a, w, b): u-a-w-b-u with u,w and a,b the non-adjacent pairs."""
    adj = _adjacency(n, indptr, indices)
    sets = [frozenset(a) for a in adj]
    for u in range(n):
        su = sets[u]
        for w in range(u + 1, n):
            if w in su:
                continue
            common = sorted(su & sets[w])
            if len(common) < 2:
                continue
            for i, a in enumerate(common):
                sa = sets[a]
                for b in common[i + 1:]:
                    if b not in sa:
                        return (u, a, w, b)
    return None


def find_bull(n, indptr, indices):
    """First induced bull in scan order: (a, b, c, p, q) with triangle
    a,b,c, pendant p adjacent only to a and pendant q adjacent only to b
    among the five; None if bull-free.

    Triangles are enumerated lexicographically; for each, the three
    ordered attachment pairs are tried with pendant candidates ascending.
    """
    adj = _adjacency(n, indptr, indices)
    sets = [frozenset(a) for a in adj]
    for u in range(n):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[v]:
                if w <= v or w not in sets[u]:
                    continue
                for a, b, c in ((u, v, w), (u, w, v), (v, w, u)):
                    tri = (a, b, c)
                    cand_a = [x for x in adj[a]
                              if x not in tri and x not in sets[b] and x not in sets[c]]
                    if not cand_a:
                        continue
                    cand_b = [x for x in adj[b]
                              if x not in tri and x not in sets[a] and x not in sets[c]]
                    for pv in cand_a:
                        sp = sets[pv]
                        for q in cand_b:
                            if q not in sp:
                                return (a, b, c, pv, q)
    return None
