"""Ground-truth brute force, exhaustive small-graph enumeration, and
seeded generators of in-class instances.

The oracles are definitional: clique cover number by subset dynamic
programming, matching number by exhaustive search, chromatic number by
iterative-deepening assignment.  They exist to check the real solver and
deliberately share no code with it.

Randomness comes from SplitMix64, a fixed, documented 64-bit generator:
the same GenSpec produces the same graph on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import RejectionBudgetExceeded, TooLarge
from .graph import Graph, build, induced
from .structure import find_bull, find_c4, find_class_violation, is_chordal, is_triangle_free

_THETA_LIMIT = 16
_MATCHING_EDGE_LIMIT = 24
_CHROMATIC_LIMIT = 12
_ENUM_LIMIT = 8
_REJECTION_BUDGET = 10**6

_M64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator (Steele, Lea & Flood's mixer).

    Chosen for the generators because its output is a pure function of the
    64-bit seed, independent of platform and Python version.
    """

    def __init__(self, seed: int):
        self._state = seed & _M64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _M64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        # 53-bit mantissa, uniform in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53


@dataclass(frozen=True)
class GenSpec:
    """Deterministic description of one generated instance."""

    family: str  # "rejection" | "girth5" | "twin-expand"
    n: int
    edge_prob: float = 0.0
    steps: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in ("rejection", "girth5", "twin-expand"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError("edge_prob must be within [0, 1]")
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        if self.family == "twin-expand" and self.steps > 0 and self.n == 0:
            raise ValueError("twin-expand needs a non-empty base graph")


# ---------------------------------------------------------------------------
# Brute-force oracles


def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def brute_theta(g: Graph) -> int:
    """Exact clique cover number by dynamic programming over vertex subsets:
    theta(S) = 1 + min over maximal cliques Q of g[S] through the lowest
    vertex of S of theta(S - Q)."""
    if g.n > _THETA_LIMIT:
        raise TooLarge(f"brute_theta guard: n={g.n} > {_THETA_LIMIT}")
    masks = _neighbor_masks(g)
    memo: dict[int, int] = {0: 0}

    def cliques_through_pivot(pivot: int, sub: int) -> list[int]:
        # Bron-Kerbosch rooted at the pivot, maximality relative to g[sub]
        out: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            if p == 0 and x == 0:
                out.append(r)
                return
            for v in _bits(p):
                bit = 1 << v
                expand(r | bit, p & masks[v], x & masks[v])
                p ^= bit
                x |= bit

        expand(1 << pivot, masks[pivot] & sub, 0)
        return out

    def theta(sub: int) -> int:
        cached = memo.get(sub)
        if cached is not None:
            return cached
        pivot = (sub & -sub).bit_length() - 1
        best = g.n + 1
        for q in cliques_through_pivot(pivot, sub):
            t = 1 + theta(sub & ~q)
            if t < best:
                best = t
        memo[sub] = best
        return best

    return theta((1 << g.n) - 1)


def brute_matching(g: Graph) -> int:
    """Exact matching number by exhaustive branching on the lowest free
    vertex (skip it, or match it to each free neighbour)."""
    if g.m > _MATCHING_EDGE_LIMIT:
        raise TooLarge(f"brute_matching guard: m={g.m} > {_MATCHING_EDGE_LIMIT}")
    masks = _neighbor_masks(g)
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        while free:
            low = free & -free
            v = low.bit_length() - 1
            if masks[v] & free:
                break
            free ^= low  # isolated within the free set
        else:
            return 0
        cached = memo.get(free)
        if cached is not None:
            return cached
        bit = 1 << v
        result = best(free ^ bit)  # v stays unmatched
        for u in _bits(masks[v] & free):
            result = max(result, 1 + best(free ^ bit ^ (1 << u)))
        memo[free] = result
        return result

    return best((1 << g.n) - 1)


def brute_chromatic(h: Graph) -> int:
    """Exact chromatic number: test k = 1, 2, ... by backtracking colour
    assignment in vertex order, capping each vertex at one fresh colour."""
    if h.n > _CHROMATIC_LIMIT:
        raise TooLarge(f"brute_chromatic guard: n={h.n} > {_CHROMATIC_LIMIT}")
    if h.n == 0:
        return 0
    colour = [-1] * h.n

    def colourable(v: int, used: int, k: int) -> bool:
        if v == h.n:
            return True
        for c in range(min(used + 1, k)):
            if all(colour[u] != c for u in h.neighbors(v)):
                colour[v] = c
                if colourable(v + 1, max(used, c + 1), k):
                    return True
                colour[v] = -1
        return False

    for k in range(1, h.n + 1):
        if colourable(0, 0, k):
            return k
    raise AssertionError("unreachable: n colours always suffice")


# ---------------------------------------------------------------------------
# Exhaustive enumeration of connected (bull, C4)-free graphs up to isomorphism


def _mask_has_c4(masks: tuple[int, ...], n: int) -> bool:
    for u in range(n):
        mu = masks[u]
        for w in range(u + 1, n):
            if mu >> w & 1:
                continue
            common = mu & masks[w]
            while common:
                low = common & -common
                a = low.bit_length() - 1
                common ^= low
                if common & ~masks[a]:
                    return True
    return False


def _mask_has_bull(masks: tuple[int, ...], n: int) -> bool:
    for u in range(n):
        for v in _bits(masks[u] >> (u + 1) << (u + 1)):
            uv = masks[u] & masks[v]
            for w in _bits(uv >> (v + 1) << (v + 1)):
                tri = (1 << u) | (1 << v) | (1 << w)
                for a, b in ((u, v), (u, w), (v, w)):
                    c = u + v + w - a - b
                    cand_a = masks[a] & ~masks[b] & ~masks[c] & ~tri
                    if not cand_a:
                        continue
                    cand_b = masks[b] & ~masks[a] & ~masks[c] & ~tri
                    for p in _bits(cand_a):
                        if cand_b & ~masks[p]:
                            return True
    return False


def _mask_class_ok(masks: tuple[int, ...], n: int) -> bool:
    return not _mask_has_c4(masks, n) and not _mask_has_bull(masks, n)


def _canonical_key(masks: tuple[int, ...]) -> tuple[int, ...]:
    """Minimum over all vertex orderings of the adjacency matrix read as
    per-position bit rows: entry k of the key encodes the adjacency of the
    k-th placed vertex to the earlier ones (earliest = most significant).

    Branch and bound: candidates at each position are tried in ascending
    bit order and a branch is cut as soon as its prefix exceeds the best
    known key.
    """
    n = len(masks)
    if n <= 1:
        return ()
    best: list[int] | None = None
    order: list[int] = []
    placed = 0
    prefix: list[int] = []

    def rec() -> None:
        nonlocal best, placed
        k = len(order)
        if k == n:
            if best is None or prefix < best:
                best = prefix[:]
            return
        cands = []
        for v in range(n):
            if placed >> v & 1:
                continue
            mv = masks[v]
            bits = 0
            for j, u in enumerate(order):
                if mv >> u & 1:
                    bits |= 1 << (k - 1 - j)
            cands.append((bits, v))
        cands.sort()
        for bits, v in cands:
            if k >= 1 and best is not None:
                prefix.append(bits)
                worse = prefix > best[:k]
                prefix.pop()
                if worse:
                    break  # cands ascending: all later siblings are worse too
            order.append(v)
            placed |= 1 << v
            if k >= 1:
                prefix.append(bits)
            rec()
            if k >= 1:
                prefix.pop()
            placed ^= 1 << v
            order.pop()

    rec()
    assert best is not None
    return tuple(best)


def _masks_from_key(key: tuple[int, ...], n: int) -> tuple[int, ...]:
    masks = [0] * n
    for k in range(1, n):
        bits = key[k - 1]
        for j in range(k):
            if bits >> (k - 1 - j) & 1:
                masks[k] |= 1 << j
                masks[j] |= 1 << k
    return tuple(masks)


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical keys of all connected (bull, C4)-free graphs on n
    vertices, one per isomorphism class, ascending.

    Built by extending every (n-1)-vertex census graph with one new vertex
    over all non-empty neighbourhoods: every connected graph has a
    non-cut vertex, and the class is hereditary, so nothing is missed.
    """
    if n == 1:
        return ((),)
    seen: set[tuple[int, ...]] = set()
    for parent_key in _census(n - 1):
        parent = _masks_from_key(parent_key, n - 1)
        for nb in range(1, 1 << (n - 1)):
            masks = tuple(
                parent[i] | (1 << (n - 1)) if nb >> i & 1 else parent[i]
                for i in range(n - 1)
            ) + (nb,)
            if not _mask_class_ok(masks, n):
                continue
            seen.add(_canonical_key(masks))
    return tuple(sorted(seen))


def enumerate_class_graphs(n: int) -> Iterator[Graph]:
    """All connected (bull, C4)-free graphs on n unlabelled vertices,
    exactly once up to isomorphism, in canonical-key order."""
    if n > _ENUM_LIMIT:
        raise TooLarge(f"enumeration guard: n={n} > {_ENUM_LIMIT}")
    if n <= 0:
        return
    for key in _census(n):
        masks = _masks_from_key(key, n)
        yield build(n, [(u, v) for u in range(n) for v in _bits(masks[u]) if v > u])


# ---------------------------------------------------------------------------
# Seeded in-class generators


def _gnp_adjacency(n: int, p: float, rng: SplitMix64) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                adj[u].add(v)
                adj[v].add(u)
    return adj


def _strip_to_girth5(adj: list[set[int]], n: int) -> None:
    """Delete edges until no triangle or C4 remains.

    Deterministic: while triangles exist, the lexicographically smallest
    triangle loses its smallest edge (a single forward edge scan, since
    deletions never create triangles); then the C4 scan removes the
    smallest edge of the first 4-cycle per non-adjacent pair scan, which
    in a triangle-free graph can only destroy further 4-cycles.
    """
    for u in range(n):
        for v in sorted(adj[u]):
            if v <= u:
                continue
            if adj[u] & adj[v]:
                adj[u].discard(v)
                adj[v].discard(u)
    for u in range(n):
        au = adj[u]
        for w in range(u + 1, n):
            if w in au:
                continue
            while True:
                common = au & adj[w]
                if len(common) < 2:
                    break
                a = min(common)
                au.discard(a)
                adj[a].discard(u)


def _girth5_adjacency(n: int, p: float, rng: SplitMix64) -> list[set[int]]:
    adj = _gnp_adjacency(n, p, rng)
    _strip_to_girth5(adj, n)
    return adj


def _graph_from_adjacency(adj: list[set[int]]) -> Graph:
    n = len(adj)
    return build(n, [(u, v) for u in range(n) for v in adj[u] if v > u])


def generate(spec: GenSpec) -> Graph:
    """Generate an instance per spec; the output always passes both the
    bull and the C4 detector (hard postcondition, checked on every call).

    rejection    sample G(n, p) until in class; budget 10^6 attempts.
    girth5       sample G(n, p), delete edges until girth >= 5.
    twin-expand  girth5 base on n vertices, then `steps` true-twin
                 duplications of base vertices 0, 1, ... cyclically
                 (true twins never create a bull or a C4).
    """
    rng = SplitMix64(spec.seed)
    if spec.family == "rejection":
        g = None
        for _ in range(_REJECTION_BUDGET):
            candidate = _graph_from_adjacency(_gnp_adjacency(spec.n, spec.edge_prob, rng))
            if find_class_violation(candidate) is None:
                g = candidate
                break
        if g is None:
            raise RejectionBudgetExceeded(
                f"no (bull, C4)-free G({spec.n}, {spec.edge_prob}) hit "
                f"within {_REJECTION_BUDGET} attempts"
            )
    elif spec.family == "girth5":
        g = _graph_from_adjacency(_girth5_adjacency(spec.n, spec.edge_prob, rng))
    else:
        adj = _girth5_adjacency(spec.n, spec.edge_prob, rng)
        for k in range(spec.steps):
            target = k % spec.n
            twin = len(adj)
            adj.append(set(adj[target]) | {target})
            for w in adj[twin]:
                adj[w].add(twin)
        g = _graph_from_adjacency(adj)

    if find_c4(g) is not None or find_bull(g) is not None:
        raise AssertionError(f"generator produced an out-of-class graph for {spec}")
    return g


# ---------------------------------------------------------------------------
# Test-side structural classification


def is_basic(g: Graph) -> bool:
    """Basic in the sense the property suites consume: triangle-free,
    chordal, or triangle-free after removing one universal vertex."""
    if is_triangle_free(g):
        return True
    if is_chordal(g):
        return True
    for u in range(g.n):
        if g.degree(u) == g.n - 1:
            rest, _ = induced(g, [v for v in range(g.n) if v != u])
            if is_triangle_free(rest):
                return True
    return False
