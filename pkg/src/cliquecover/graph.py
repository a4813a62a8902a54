"""Immutable simple-graph core.

Vertices are dense integer ids ``0..n-1``.  Neighbour lists are kept in
ascending order so pairwise set operations (domination tests, common
neighbours) run in linear time, and every derived graph (complement,
induced subgraph) is built through the same constructor so the symmetry
and no-self-loop invariants hold everywhere.

Also hosts the DIMACS-like text format: header ``p edge <n> <m>`` followed
by one ``e <u> <v>`` line per edge with 1-based endpoints; blank lines and
lines whose first token is ``c`` are ignored.
"""

from __future__ import annotations

from array import array
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import ConstructionError, ParseError

VertexSet = tuple[int, ...]  # ascending, duplicate-free


class Graph:
    """Simple undirected graph, immutable after construction.

    Use :func:`build` rather than calling the constructor directly; the
    constructor trusts its input to be symmetric, sorted and loop-free.
    """

    __slots__ = ("n", "m", "_nbrs", "_sets", "_csr")

    def __init__(self, n: int, nbrs: tuple[tuple[int, ...], ...]):
        self.n = n
        self._nbrs = nbrs
        self._sets = tuple(frozenset(a) for a in nbrs)
        self.m = sum(len(a) for a in nbrs) // 2
        self._csr: tuple[array, array] | None = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of v in ascending order."""
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if v > u:
                    yield (u, v)

    def csr(self) -> tuple[array, array]:
        """Adjacency in CSR form (indptr, indices) for the kernel layer."""
        if self._csr is None:
            indptr = array("i", [0] * (self.n + 1))
            indices = array("i")
            for v in range(self.n):
                indices.extend(self._nbrs[v])
                indptr[v + 1] = len(indices)
            self._csr = (indptr, indices)
        return self._csr

    def audit(self) -> None:
        """Debug check of the representation invariants; raises on violation."""
        for v in range(self.n):
            nbrs = self._nbrs[v]
            if list(nbrs) != sorted(set(nbrs)):
                raise AssertionError(f"neighbour list of {v} not sorted/unique")
            if v in self._sets[v]:
                raise AssertionError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise AssertionError(f"endpoint {u} out of range")
                if v not in self._sets[u]:
                    raise AssertionError(f"edge {v}-{u} not symmetric")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Duplicate and reversed edges are silently de-duplicated; self-loops and
    out-of-range endpoints raise ConstructionError.
    """
    if n < 0:
        raise ConstructionError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ConstructionError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ConstructionError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


def complement(g: Graph) -> Graph:
    """The graph on the same vertices whose edges are exactly g's non-edges."""
    full = range(g.n)
    nbrs = tuple(
        tuple(u for u in full if u != v and u not in g.neighbor_set(v))
        for v in full
    )
    return Graph(g.n, nbrs)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Subgraph induced by the vertex set s, plus the index map back.

    Vertex i of the result corresponds to the i-th smallest member of s;
    the returned tuple maps result indices to original ids.
    """
    vs = tuple(sorted(set(s)))
    pos = {orig: i for i, orig in enumerate(vs)}
    for orig in vs:
        if not 0 <= orig < g.n:
            raise ConstructionError(f"vertex {orig} out of range for n={g.n}")
    nbrs = tuple(
        tuple(pos[w] for w in g.neighbors(orig) if w in pos)
        for orig in vs
    )
    return Graph(len(vs), nbrs), vs


def components(g: Graph) -> list[VertexSet]:
    """Connected components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# ---------------------------------------------------------------------------
# DIMACS-like serialization


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS dialect; raises ParseError with a 1-based line number."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n = int(tokens[2])
                declared_m = int(tokens[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in problem line", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("non-integer endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    return build(n, edges)


def format_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize: comments, header, then 'e u v' (u < v, 1-based, ascending)."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_dimacs(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def save_dimacs(g: Graph, path: str, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_dimacs(g, comments))
