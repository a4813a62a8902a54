"""Exact minimum clique cover for (bull, C4)-free graphs.

Equivalently, via complementation, minimum colouring of (bull, 2K2)-free
graphs.  The public surface re-exports the graph core, the matching and
structure layers, the solver, and the brute-force oracles/generators.
"""

from ._kernels import active_backend, available_backends
from .errors import (
    ClassViolation,
    CliqueCoverError,
    ConstructionError,
    NotConnected,
    NotCutVertex,
    ParseError,
    RejectionBudgetExceeded,
    StructureFailure,
    TooLarge,
    TriangleFound,
)
from .graph import (
    Graph,
    build,
    complement,
    components,
    format_dimacs,
    induced,
    is_connected,
    load_dimacs,
    parse_dimacs,
    save_dimacs,
)
from .matching import CliqueCover, Matching, matching_number, maximum_matching, triangle_free_cover
from .oracle import (
    GenSpec,
    SplitMix64,
    brute_chromatic,
    brute_matching,
    brute_theta,
    enumerate_class_graphs,
    generate,
    is_basic,
)
from .solver import (
    Colouring,
    SolveResult,
    SolveStats,
    VerifyReport,
    min_clique_cover,
    min_colouring,
    min_colouring_result,
    reinsert,
    solve_connected,
    split_at_cutset,
    verify_cover,
)
from .structure import (
    CutCertificate,
    ReductionTrace,
    cut_vertices,
    f_value,
    find_bull,
    find_c4,
    find_class_violation,
    find_dominated_pair,
    find_terminal_cutset,
    find_triangle,
    is_chordal,
    is_triangle_free,
    reduce,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "build", "complement", "induced", "components", "is_connected",
    "parse_dimacs", "format_dimacs", "load_dimacs", "save_dimacs",
    "Matching", "CliqueCover", "maximum_matching", "matching_number", "triangle_free_cover",
    "ReductionTrace", "CutCertificate", "find_triangle", "find_c4", "find_bull",
    "find_class_violation", "find_dominated_pair", "reduce", "cut_vertices",
    "f_value", "find_terminal_cutset", "is_triangle_free", "is_chordal",
    "SolveResult", "SolveStats", "Colouring", "VerifyReport",
    "min_clique_cover", "solve_connected", "split_at_cutset", "reinsert",
    "verify_cover", "min_colouring", "min_colouring_result",
    "GenSpec", "SplitMix64", "brute_theta", "brute_matching", "brute_chromatic",
    "enumerate_class_graphs", "generate", "is_basic",
    "CliqueCoverError", "ConstructionError", "ParseError", "NotConnected",
    "NotCutVertex", "TriangleFound", "TooLarge", "RejectionBudgetExceeded",
    "ClassViolation", "StructureFailure",
    "active_backend", "available_backends",
]
