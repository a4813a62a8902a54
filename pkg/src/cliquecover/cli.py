"""Command-line surface: solve, color, verify, gen, oracle, bench.

Graphs travel in the DIMACS dialect (1-based ids), covers in the JSON
result document (0-based ids).  Text output prints vertices 1-based to
match the input files.

Exit codes: 0 ok, 1 parse/input error, 2 class violation, 3 structure
failure, 4 verification failure, 5 generation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from typing import Sequence

from . import _kernels
from .errors import (
    ClassViolation,
    ConstructionError,
    ParseError,
    RejectionBudgetExceeded,
    StructureFailure,
    TooLarge,
)
from .graph import Graph, format_dimacs, load_dimacs
from .matching import CliqueCover
from .oracle import GenSpec, brute_chromatic, brute_matching, brute_theta, generate
from .solver import (
    VALIDATE_AUTO_LIMIT,
    colouring_document,
    cover_document,
    min_clique_cover,
    min_colouring_result,
    verify_cover,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CLASS_VIOLATION = 2
EXIT_STRUCTURE_FAILURE = 3
EXIT_VERIFY_FAILURE = 4
EXIT_GEN_BUDGET = 5


def _witness_line(err: ClassViolation) -> str:
    ids = " ".join(str(v + 1) for v in err.vertices)
    if err.in_complement:
        if err.kind == "C4":
            # complement C4 in cycle order (u, a, w, b): the original
            # graph's edges are u-w and a-b, i.e. an induced 2K2
            u, a, w, b = err.vertices
            return f"induced 2K2: {u + 1} {w + 1} {a + 1} {b + 1}"
        return f"induced bull: {ids}"
    return f"induced {err.kind}: {ids}"


def _resolved_validate(flag: bool | None, n: int) -> bool:
    return flag if flag is not None else n <= VALIDATE_AUTO_LIMIT


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_dimacs(args.file)
    try:
        result = min_clique_cover(g, validate=args.validate)
    except ClassViolation as err:
        print(_witness_line(err))
        return EXIT_CLASS_VIOLATION
    except StructureFailure as err:
        print(f"structure failure: {err}", file=sys.stderr)
        return EXIT_STRUCTURE_FAILURE
    validated = _resolved_validate(args.validate, g.n)
    if args.format == "json":
        print(json.dumps(cover_document(g, result, validated), indent=2))
    else:
        print(f"theta {result.theta}")
        for clique in sorted(sorted(c) for c in result.cover.cliques):
            print("clique " + " ".join(str(v + 1) for v in clique))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    h = load_dimacs(args.file)
    try:
        colouring, result = min_colouring_result(h, validate=args.validate)
    except ClassViolation as err:
        print(_witness_line(err))
        return EXIT_CLASS_VIOLATION
    except StructureFailure as err:
        print(f"structure failure: {err}", file=sys.stderr)
        return EXIT_STRUCTURE_FAILURE
    validated = _resolved_validate(args.validate, h.n)
    if args.format == "json":
        print(json.dumps(colouring_document(h, colouring, result, validated), indent=2))
    else:
        print(f"colours {colouring.num_colours}")
        classes: list[list[int]] = [[] for _ in range(colouring.num_colours)]
        for v, c in enumerate(colouring.colour_of):
            classes[c].append(v)
        for cls in sorted(classes):
            print("class " + " ".join(str(v + 1) for v in cls))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_dimacs(args.graph)
    try:
        with open(args.cover, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        raw_cliques = doc["cliques"]
        declared_theta = doc["theta"]
        declared_n = doc.get("n", g.n)
    except (json.JSONDecodeError, KeyError, TypeError) as err:
        print(f"cover file error: {err}", file=sys.stderr)
        return EXIT_PARSE
    if declared_n != g.n:
        print(f"cover n={declared_n} does not match graph n={g.n}", file=sys.stderr)
        return EXIT_VERIFY_FAILURE
    cover = CliqueCover(tuple(tuple(sorted(set(c))) for c in raw_cliques))
    report = verify_cover(g, cover)
    if not report.valid:
        print(report.violation, file=sys.stderr)
        return EXIT_VERIFY_FAILURE
    if declared_theta != len(cover.cliques):
        print(f"declared theta {declared_theta} != {len(cover.cliques)} cliques",
              file=sys.stderr)
        return EXIT_VERIFY_FAILURE
    print(f"ok theta {declared_theta}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GenSpec(family=args.family, n=args.n, edge_prob=args.p,
                       steps=args.steps, seed=args.seed)
    except ValueError as err:
        print(f"invalid generator spec: {err}", file=sys.stderr)
        return EXIT_PARSE
    try:
        g = generate(spec)
    except RejectionBudgetExceeded as err:
        print(str(err), file=sys.stderr)
        return EXIT_GEN_BUDGET
    text = format_dimacs(g, [f"seed={spec.seed} family={spec.family}"])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {args.out} n={g.n} m={g.m}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_dimacs(args.file)
    fn = {"theta": brute_theta, "matching": brute_matching, "chromatic": brute_chromatic}
    try:
        print(fn[args.stat](g))
    except TooLarge as err:
        print(str(err), file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Benchmark


def bench_instance(size: int, family: str) -> Graph:
    """Deterministic benchmark instance of a given total size.

    twin-expand splits the size into a girth-5 base of size//2 vertices
    plus the remaining true-twin duplications; the other families use the
    size directly.  Edge probability is min(0.15, 3/n); seed equals size.
    """
    if family == "twin-expand":
        base = max(1, size // 2)
        p = min(0.15, 3.0 / base)
        spec = GenSpec(family=family, n=base, edge_prob=p, steps=size - base, seed=size)
    else:
        p = min(0.15, 3.0 / max(1, size))
        spec = GenSpec(family=family, n=size, edge_prob=p, seed=size)
    return generate(spec)


def bench_rows(sizes: Sequence[int], family: str, repeats: int,
               backend: str | None = None) -> list[tuple[int, int, float, int]]:
    """(n, m_edges, median_ms, theta) per size, solving each instance
    `repeats` times and taking the median wall time."""
    rows = []
    for size in sizes:
        g = bench_instance(size, family)
        times = []
        theta = None
        for _ in range(repeats):
            if backend is None:
                start = time.perf_counter()
                result = min_clique_cover(g, validate=False)
                elapsed = time.perf_counter() - start
            else:
                with _kernels.use(backend):
                    start = time.perf_counter()
                    result = min_clique_cover(g, validate=False)
                    elapsed = time.perf_counter() - start
            times.append(elapsed * 1000.0)
            theta = result.theta
        rows.append((g.n, g.m, statistics.median(times), theta))
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print(f"invalid --sizes list {args.sizes!r}", file=sys.stderr)
        return EXIT_PARSE
    if not sizes or any(s <= 0 for s in sizes) or args.repeats < 1:
        print("sizes must be positive and repeats >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        rows = bench_rows(sizes, args.family, args.repeats, backend=args.backend)
    except RejectionBudgetExceeded as err:
        print(str(err), file=sys.stderr)
        return EXIT_GEN_BUDGET
    print("n,m_edges,median_ms,theta")
    for n, m, ms, theta in rows:
        print(f"{n},{m},{ms:.3f},{theta}")
    for (n1, _, t1, _), (n2, _, t2, _) in zip(rows, rows[1:]):
        if t1 > 0:
            print(f"time ratio {n1}->{n2}: {t2 / t1:.2f}x", file=sys.stderr)
    if args.compare_backends:
        if "compiled" not in _kernels.available_backends():
            print("compare: compiled backend unavailable", file=sys.stderr)
        else:
            print("backend comparison (median_ms per size):", file=sys.stderr)
            pure = bench_rows(sizes, args.family, args.repeats, backend="pure")
            comp = bench_rows(sizes, args.family, args.repeats, backend="compiled")
            for (n, _, tp, _), (_, _, tc, _) in zip(pure, comp):
                speedup = tp / tc if tc > 0 else float("inf")
                print(f"  n={n}: pure {tp:.3f} ms, compiled {tc:.3f} ms "
                      f"({speedup:.1f}x)", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquecover",
        description="Minimum clique cover of (bull, C4)-free graphs and "
                    "minimum colouring of (bull, 2K2)-free graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_validate(p: argparse.ArgumentParser) -> None:
        p.add_argument("--validate", action=argparse.BooleanOptionalAction, default=None,
                       help="force class validation on/off (default: on for "
                            f"n <= {VALIDATE_AUTO_LIMIT}, off above with a warning)")

    def add_format(p: argparse.ArgumentParser) -> None:
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="format", action="store_const", const="json",
                         help="emit the JSON result document")
        fmt.add_argument("--text", dest="format", action="store_const", const="text",
                         help="emit plain text (default)")
        p.set_defaults(format="text")

    p_solve = sub.add_parser("solve", help="minimum clique cover of a DIMACS graph")
    p_solve.add_argument("file")
    add_validate(p_solve)
    add_format(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_color = sub.add_parser("color", help="minimum colouring (cover of the complement)")
    p_color.add_argument("file")
    add_validate(p_color)
    add_format(p_color)
    p_color.set_defaults(func=cmd_color)

    p_verify = sub.add_parser("verify", help="check a JSON cover document against a graph")
    p_verify.add_argument("graph")
    p_verify.add_argument("cover")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate an in-class instance")
    p_gen.add_argument("--family", required=True,
                       choices=["rejection", "girth5", "twin-expand"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=0.15)
    p_gen.add_argument("--steps", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="brute-force oracle value for a small graph")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--stat", choices=["theta", "matching", "chromatic"],
                          default="theta")
    p_oracle.set_defaults(func=cmd_oracle)

    p_bench = sub.add_parser("bench", help="timing table over generated instances")
    p_bench.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p_bench.add_argument("--family", default="twin-expand",
                         choices=["rejection", "girth5", "twin-expand"])
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--backend", choices=["pure", "compiled"], default=None,
                         help="force a kernel backend (default: auto)")
    p_bench.add_argument("--compare-backends", action="store_true",
                         help="also report pure vs compiled timings to stderr")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (ConstructionError, OSError) as err:
        print(str(err), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
