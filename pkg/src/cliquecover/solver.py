"""Top-level minimum clique cover solver and the colouring mode.

The solve loop per connected piece: strip dominators until irreducible;
if the remainder is triangle-free, cover it with a maximum matching plus
singletons; otherwise locate a terminal one-point cutset, split off the
triangle-free side, recurse on the rest, and finally replay the removal
trace to reinsert dominators.  Disconnected inputs are solved per
component and concatenated in component order.

Minimum colouring of a graph h is the clique cover of its complement,
with cover cliques turned into disjoint colour classes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ClassViolation, StructureFailure
from .graph import Graph, VertexSet, complement, components, induced
from .matching import CliqueCover, matching_number, triangle_free_cover
from .structure import (
    CutCertificate,
    ReductionTrace,
    find_class_violation,
    find_terminal_cutset,
    is_triangle_free,
    reduce,
)

# Bull detection is the expensive part of validation; above this size the
# auto default switches validation off with a warning.
VALIDATE_AUTO_LIMIT = 300


@dataclass
class SolveStats:
    """Counters accumulated over one solve call."""

    reductions: int = 0
    cutset_splits: int = 0
    matching_calls: int = 0
    max_depth: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "reductions": self.reductions,
            "cutset_splits": self.cutset_splits,
            "matching_calls": self.matching_calls,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class SolveResult:
    theta: int
    cover: CliqueCover
    stats: SolveStats


@dataclass(frozen=True)
class Colouring:
    """Per-vertex colour indices 0..num_colours-1, every colour used,
    adjacent vertices never sharing a colour."""

    colour_of: tuple[int, ...]
    num_colours: int


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violation: str | None = None


def _lift(cliques: list[VertexSet], vmap: VertexSet) -> list[VertexSet]:
    # vmap is monotone, so sortedness of each clique is preserved
    return [tuple(vmap[x] for x in c) for c in cliques]


def _resolve_validate(flag: bool | None, n: int) -> bool:
    if flag is not None:
        return flag
    if n > VALIDATE_AUTO_LIMIT:
        warnings.warn(
            f"class validation skipped for n={n} > {VALIDATE_AUTO_LIMIT}; "
            "pass validate=True to force it",
            stacklevel=3,
        )
        return False
    return True


def min_clique_cover(g: Graph, validate: bool | None = None) -> SolveResult:
    """Minimum clique cover of a (bull, C4)-free graph.

    ``validate=None`` checks class membership for n <= 300 and skips it
    with a warning above.  Validation failures raise ClassViolation with
    the witness vertices.  Without validation, out-of-class inputs either
    solve anyway or raise StructureFailure when the structural guarantee
    breaks mid-recursion; covers that are returned are always valid.
    """
    if _resolve_validate(validate, g.n):
        violation = find_class_violation(g)
        if violation is not None:
            raise ClassViolation(*violation)
    stats = SolveStats()
    cliques: list[VertexSet] = []
    for comp in components(g):
        sub, vmap = induced(g, comp)
        cliques.extend(_lift(_solve(sub, stats, 1), vmap))
    return SolveResult(len(cliques), CliqueCover(tuple(cliques)), stats)


def solve_connected(g: Graph) -> SolveResult:
    """Single-component driver: reduce, cover or split, reinsert."""
    stats = SolveStats()
    cliques = _solve(g, stats, 1)
    return SolveResult(len(cliques), CliqueCover(tuple(cliques)), stats)


def _solve(g: Graph, stats: SolveStats, depth: int) -> list[VertexSet]:
    """Cover of an arbitrary (possibly disconnected) graph, in g's ids."""
    if depth > stats.max_depth:
        stats.max_depth = depth
    h, survivors, trace = reduce(g)
    stats.reductions += len(trace)
    if is_triangle_free(h):
        stats.matching_calls += 1
        cover_h = list(triangle_free_cover(h).cliques)
    else:
        # removal of dominators may have disconnected the graph; the
        # cutset machinery needs connected input
        cover_h = []
        for comp in components(h):
            sub, vmap = induced(h, comp)
            cover_h.extend(_lift(_solve_irreducible(sub, stats, depth), vmap))
    lifted = reinsert(CliqueCover(tuple(_lift(cover_h, survivors))), trace)
    return list(lifted.cliques)


def _solve_irreducible(g: Graph, stats: SolveStats, depth: int) -> list[VertexSet]:
    """g connected and irreducible (components of a reduced graph are both)."""
    if is_triangle_free(g):
        stats.matching_calls += 1
        return list(triangle_free_cover(g).cliques)
    cert = find_terminal_cutset(g)
    if cert is None or cert.terminal_part is None:
        raise StructureFailure(
            f"connected irreducible graph on {g.n} vertices contains a triangle "
            "but has no terminal one-point cutset; input is not (bull, C4)-free"
        )
    stats.cutset_splits += 1
    return _split(g, cert, stats, depth)


def _split(g: Graph, cert: CutCertificate, stats: SolveStats, depth: int) -> list[VertexSet]:
    v = cert.v
    part = cert.parts[cert.terminal_part]
    part_set = set(part)
    gi, gi_map = induced(g, part + (v,))
    gi_minus_v, giv_map = induced(g, part)
    m_i = matching_number(gi)
    m_iv = matching_number(gi_minus_v)
    stats.matching_calls += 2
    diff = m_i - m_iv
    if diff not in (0, 1):
        raise AssertionError(f"matching drop {diff} outside {{0,1}} at cut vertex {v}")
    rest = [u for u in range(g.n) if u not in part_set]
    if diff == 0:
        # some minimum cover of G_i keeps v in a singleton: cover G_i - v
        # here and leave v to the other side
        stats.matching_calls += 1
        cover_i = _lift(list(triangle_free_cover(gi_minus_v).cliques), giv_map)
        sub, vmap = induced(g, rest)
        cover_rest = _lift(_solve(sub, stats, depth + 1), vmap)
    else:
        # every maximum matching of G_i covers v, so the matching-based
        # cover puts v in a 2-clique; the other side drops v
        stats.matching_calls += 1
        tf = triangle_free_cover(gi)
        v_local = gi_map.index(v)
        if not any(len(c) == 2 and v_local in c for c in tf.cliques):
            raise AssertionError(f"cut vertex {v} unmatched in case-2 cover")
        cover_i = _lift(list(tf.cliques), gi_map)
        sub, vmap = induced(g, [u for u in rest if u != v])
        cover_rest = _lift(_solve(sub, stats, depth + 1), vmap)
    return cover_i + cover_rest


def split_at_cutset(g: Graph, cert: CutCertificate) -> SolveResult:
    """Solve g given a terminal-cutset certificate (cert.terminal_part must
    be set and the part + {v} subgraph triangle-free)."""
    if cert.terminal_part is None:
        raise ValueError("certificate has no terminal part")
    stats = SolveStats()
    stats.cutset_splits += 1
    stats.max_depth = 1
    cliques = _split(g, cert, stats, 1)
    return SolveResult(len(cliques), CliqueCover(tuple(cliques)), stats)


def reinsert(cover: CliqueCover, trace: ReductionTrace) -> CliqueCover:
    """Undo a reduction: in reverse trace order, append each dominator to
    the first clique containing its witness.  Cover size is preserved."""
    cliques = [list(c) for c in cover.cliques]
    for x, y in reversed(trace.steps):
        for c in cliques:
            if y in c:
                c.append(x)
                break
        else:
            raise AssertionError(f"no clique contains witness {y}")
    return CliqueCover(tuple(tuple(sorted(c)) for c in cliques))


def verify_cover(g: Graph, cover: CliqueCover) -> VerifyReport:
    """Check that every set induces a clique and every vertex is covered.
    Violations are reported, not raised; the first one found wins."""
    covered: set[int] = set()
    for i, clique in enumerate(cover.cliques):
        members = sorted(set(clique))
        for v in members:
            if not 0 <= v < g.n:
                return VerifyReport(False, f"set {i} has out-of-range vertex {v}")
        for a_idx, a in enumerate(members):
            for b in members[a_idx + 1:]:
                if not g.has_edge(a, b):
                    return VerifyReport(False, f"set {i} not a clique")
        covered.update(members)
    for v in range(g.n):
        if v not in covered:
            return VerifyReport(False, f"vertex {v} uncovered")
    return VerifyReport(True)


def colouring_from_cover(n: int, cover: CliqueCover) -> Colouring:
    """Turn complement-cover cliques into disjoint colour classes: each
    vertex keeps its first containing clique; colours are compacted to
    0..k-1 preserving clique order."""
    assigned = [-1] * n
    for i, clique in enumerate(cover.cliques):
        for v in clique:
            if assigned[v] == -1:
                assigned[v] = i
    used = sorted(set(assigned))
    if used and used[0] == -1:
        raise AssertionError("cover does not cover every vertex")
    remap = {old: new for new, old in enumerate(used)}
    return Colouring(tuple(remap[c] for c in assigned), len(used))


def min_colouring_result(h: Graph, validate: bool | None = None) -> tuple[Colouring, SolveResult]:
    """Colouring plus the underlying complement-cover result (for stats)."""
    comp = complement(h)
    if _resolve_validate(validate, h.n):
        violation = find_class_violation(comp)
        if violation is not None:
            raise ClassViolation(*violation, in_complement=True)
    result = min_clique_cover(comp, validate=False)
    colouring = colouring_from_cover(h.n, result.cover)
    for u, v in h.edges():
        if colouring.colour_of[u] == colouring.colour_of[v]:
            raise AssertionError(f"adjacent vertices {u},{v} share a colour")
    return colouring, result


def min_colouring(h: Graph, validate: bool | None = None) -> Colouring:
    """Minimum proper colouring of a (bull, 2K2)-free graph h, computed as
    a minimum clique cover of complement(h); num_colours equals the
    chromatic number for in-class inputs.

    Validation checks that complement(h) is (bull, C4)-free, i.e. h is
    (bull, 2K2)-free (the bull is self-complementary); witnesses are
    reported in complement terms, a complement C4 being a 2K2 of h.
    """
    colouring, _ = min_colouring_result(h, validate)
    return colouring


def canonical_cliques(cover: CliqueCover) -> list[list[int]]:
    """Cliques sorted internally ascending and lexicographically among
    themselves (the JSON wire order)."""
    return sorted([sorted(set(c)) for c in cover.cliques])


def cover_document(g: Graph, result: SolveResult, validated: bool) -> dict:
    """The JSON result document for cover mode (0-based vertex ids)."""
    return {
        "n": g.n,
        "theta": result.theta,
        "cliques": canonical_cliques(result.cover),
        "mode": "cover",
        "validated": validated,
        "stats": result.stats.as_dict(),
    }


def colouring_document(h: Graph, colouring: Colouring, result: SolveResult,
                       validated: bool) -> dict:
    """The JSON result document for colouring mode; cliques holds the
    colour classes (stable sets of h)."""
    classes: list[list[int]] = [[] for _ in range(colouring.num_colours)]
    for v, c in enumerate(colouring.colour_of):
        classes[c].append(v)
    return {
        "n": h.n,
        "theta": colouring.num_colours,
        "cliques": sorted(sorted(cls) for cls in classes),
        "mode": "colouring",
        "validated": validated,
        "stats": result.stats.as_dict(),
    }
