"""Exception types shared across the package."""

from __future__ import annotations


class CliqueCoverError(Exception):
    """Base class for all package-specific errors."""


class ConstructionError(CliqueCoverError):
    """Invalid graph construction input (self-loop, endpoint out of range)."""


class ParseError(CliqueCoverError):
    """Malformed DIMACS-style input.  ``line`` is 1-based, or None when the
    error is not attached to a specific line (e.g. missing header)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnected(CliqueCoverError):
    """Operation requires a connected graph."""


class NotCutVertex(CliqueCoverError):
    """f-value requested for a vertex whose removal does not disconnect."""


class TriangleFound(CliqueCoverError):
    """Debug guard: a triangle-free-only routine received a triangle."""

    def __init__(self, triangle: tuple[int, int, int]):
        self.triangle = triangle
        super().__init__(f"input contains triangle {triangle}")


class TooLarge(CliqueCoverError):
    """Input exceeds a brute-force oracle's hard size guard."""


class RejectionBudgetExceeded(CliqueCoverError):
    """Rejection sampler ran out of attempts without an in-class hit."""


class ClassViolation(CliqueCoverError):
    """Validated input is not (bull, C4)-free.

    ``kind`` is "C4" or "bull"; ``vertices`` is the witness tuple as
    returned by the detector.  ``in_complement`` marks witnesses found in
    the complement (colouring mode), where a complement C4 is a 2K2 of
    the original graph.
    """

    def __init__(self, kind: str, vertices: tuple[int, ...], in_complement: bool = False):
        self.kind = kind
        self.vertices = vertices
        self.in_complement = in_complement
        where = " in complement" if in_complement else ""
        super().__init__(f"induced {kind}{where}: {' '.join(str(v) for v in vertices)}")


class StructureFailure(CliqueCoverError):
    """An in-class structural guarantee failed mid-solve: the graph at hand
    is connected, irreducible and contains a triangle, yet no terminal
    one-point cutset exists.  Signals an out-of-class input."""

    def __init__(self, context: str):
        self.context = context
        super().__init__(context)
