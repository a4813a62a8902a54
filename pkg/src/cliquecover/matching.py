"""Maximum matching in general graphs and the matching-based minimum
clique cover for triangle-free inputs.

For a triangle-free graph every clique has at most two vertices, so a
minimum clique cover is a maximum matching plus singletons for the
exposed vertices, of size n - m(G).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import TriangleFound
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored as (u, v) pairs with
    u < v in ascending lexicographic order."""

    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True)
class CliqueCover:
    """An ordered list of cliques (sorted vertex tuples) jointly covering
    every vertex of the host graph."""

    cliques: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.cliques)


def _match_array(g: Graph) -> list[int]:
    indptr, indices = g.csr()
    return list(_kernels.max_matching(g.n, indptr, indices))


def maximum_matching(g: Graph) -> Matching:
    """A maximum cardinality matching of g; deterministic for a fixed input."""
    match = _match_array(g)
    return Matching(tuple((v, match[v]) for v in range(g.n) if match[v] > v))


def matching_number(g: Graph) -> int:
    """m(g): the number of edges in a largest matching."""
    return len(maximum_matching(g))


def triangle_free_cover(g: Graph) -> CliqueCover:
    """Minimum clique cover of a triangle-free graph: matched pairs as
    2-cliques plus singletons for exposed vertices, |cover| = n - m(g).

    The caller asserts triangle-freeness; debug runs re-check it and raise
    TriangleFound on a violation (a caller logic error).
    """
    if __debug__:
        indptr, indices = g.csr()
        tri = _kernels.find_triangle(g.n, indptr, indices)
        if tri is not None:
            raise TriangleFound(tri)
    match = _match_array(g)
    cliques: list[VertexSet] = []
    for v in range(g.n):
        if match[v] == -1:
            cliques.append((v,))
        elif match[v] > v:
            cliques.append((v, match[v]))
    return CliqueCover(tuple(cliques))
