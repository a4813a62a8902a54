"""Structural predicates and decompositions driving the solver.

Covers domination/reduction, induced triangle/C4/bull detection, cut
vertices, per-cut-vertex minimum component sizes, and the terminal
one-point cutset search.  Everything is a pure read-only analysis over
immutable graphs; tie-breaks are fixed to ascending vertex/part order so
results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .errors import NotConnected, NotCutVertex
from .graph import Graph, VertexSet, induced, is_connected


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered (dominator, witness) removals, in original vertex ids.

    At the moment of each removal the dominator was adjacent to and
    dominated the witness; a step's witness is never the dominator of any
    earlier or equal step."""

    steps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class CutCertificate:
    """A cut vertex v with the components of G - v, its f-value (minimum
    component size) and, when present, the index of a terminal part whose
    union with v induces a triangle-free subgraph."""

    v: int
    parts: tuple[VertexSet, ...]
    f: int
    terminal_part: int | None


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle (u < v < w), or None."""
    indptr, indices = g.csr()
    return _kernels.find_triangle(g.n, indptr, indices)


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def find_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle in cycle order, or None; first hit of the fixed
    scan (smallest vertex of any induced C4 first)."""
    indptr, indices = g.csr()
    return _kernels.find_c4(g.n, indptr, indices)


def find_bull(g: Graph) -> tuple[int, int, int, int, int] | None:
    """An induced bull as (a, b, c, p, q): triangle a,b,c with pendant p
    adjacent only to a and pendant q adjacent only to b among the five."""
    indptr, indices = g.csr()
    return _kernels.find_bull(g.n, indptr, indices)


def find_class_violation(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """First witness that g is not (bull, C4)-free: ("C4", verts) or
    ("bull", verts); None when g is in class.  C4 is checked first."""
    c4 = find_c4(g)
    if c4 is not None:
        return ("C4", c4)
    bull = find_bull(g)
    if bull is not None:
        return ("bull", bull)
    return None


def find_dominated_pair(g: Graph) -> tuple[int, int] | None:
    """First adjacent pair (x, y) with x dominating y (every neighbour of y
    other than x is a neighbour of x), scanning x then y ascending; None
    iff g is irreducible."""
    for x in range(g.n):
        sx = g.neighbor_set(x)
        for y in g.neighbors(x):
            if all(w == x or w in sx for w in g.neighbors(y)):
                return (x, y)
    return None


def reduce(g: Graph) -> tuple[Graph, VertexSet, ReductionTrace]:
    """Repeatedly remove the dominator of the first dominated pair until
    the graph is irreducible.

    Returns the irreducible graph, the surviving original ids (result
    index i corresponds to survivors[i]) and the removal trace.
    """
    indptr, indices = g.csr()
    doms, wits = _kernels.reduce_trace(g.n, indptr, indices)
    removed = set(doms)
    survivors = tuple(v for v in range(g.n) if v not in removed)
    sub, _ = induced(g, survivors)
    return sub, survivors, ReductionTrace(tuple(zip(doms, wits)))


def _parts_without(g: Graph, v: int) -> list[VertexSet]:
    """Components of g - v, in g's vertex ids, ordered by smallest member."""
    seen = [False] * g.n
    seen[v] = True
    parts: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for u in g.neighbors(x):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        parts.append(tuple(sorted(comp)))
    return parts


def cut_vertices(g: Graph) -> VertexSet:
    """Articulation points of a connected graph, ascending."""
    if not is_connected(g):
        raise NotConnected("cut_vertices requires a connected graph")
    n = g.n
    if n <= 2:
        return ()
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    root = 0
    disc[root] = low[root] = 0
    timer = 1
    root_children = 0
    frames: list[list[int]] = [[root, -1, 0]]
    while frames:
        frame = frames[-1]
        v, parent = frame[0], frame[1]
        nbrs = g.neighbors(v)
        if frame[2] < len(nbrs):
            to = nbrs[frame[2]]
            frame[2] += 1
            if to == parent:
                continue
            if disc[to] == -1:
                disc[to] = low[to] = timer
                timer += 1
                if v == root:
                    root_children += 1
                frames.append([to, v, 0])
            elif disc[to] < low[v]:
                low[v] = disc[to]
        else:
            frames.pop()
            if frames:
                pv = frames[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if pv != root and low[v] >= disc[pv]:
                    cut[pv] = True
    if root_children >= 2:
        cut[root] = True
    return tuple(v for v in range(n) if cut[v])


def f_value(g: Graph, v: int) -> int:
    """Minimum component size of g - v for a cut vertex v of connected g."""
    if not is_connected(g):
        raise NotConnected("f_value requires a connected graph")
    parts = _parts_without(g, v)
    if len(parts) < 2:
        raise NotCutVertex(f"vertex {v} is not a cut vertex")
    return min(len(p) for p in parts)


def _terminal_part_index(g: Graph, v: int, parts: list[VertexSet]) -> int | None:
    # parts scanned smallest first (ties by part index); a part qualifies
    # when part + {v} induces a triangle-free subgraph
    for i in sorted(range(len(parts)), key=lambda k: (len(parts[k]), k)):
        sub, _ = induced(g, parts[i] + (v,))
        if is_triangle_free(sub):
            return i
    return None


def find_terminal_cutset(g: Graph) -> CutCertificate | None:
    """Certificate for a terminal one-point cutset, or None.

    The cut vertex with minimum f-value (ties to the smallest index) is
    tried first; if none of its parts is terminal, all cut vertices are
    scanned in ascending (f, index) order before giving up.  Absence is a
    class-violation signal for irreducible non-triangle-free inputs, so
    the search is exhaustive.
    """
    cuts = cut_vertices(g)
    if not cuts:
        return None
    infos = []
    for v in cuts:
        parts = _parts_without(g, v)
        infos.append((min(len(p) for p in parts), v, parts))
    infos.sort(key=lambda t: (t[0], t[1]))
    for f, v, parts in infos:
        idx = _terminal_part_index(g, v, parts)
        if idx is not None:
            return CutCertificate(v=v, parts=tuple(parts), f=f, terminal_part=idx)
    return None


def is_chordal(g: Graph) -> bool:
    """Hole-freeness via perfect elimination: repeatedly delete a simplicial
    vertex; chordal iff the graph eliminates completely."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    alive = set(range(g.n))
    while alive:
        simplicial = None
        for v in sorted(alive):
            if all(b in adj[a] for a, b in combinations(sorted(adj[v]), 2)):
                simplicial = v
                break
        if simplicial is None:
            return False
        for w in adj[simplicial]:
            adj[w].discard(simplicial)
        del adj[simplicial]
        alive.remove(simplicial)
    return True
