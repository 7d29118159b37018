"""Error hierarchy for the exact algebra core."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from chebyshev_derivations.multipoly import MultiPoly


class ChebyshevError(Exception):
    """Base class for every error raised by the package."""


class VariableCountError(ChebyshevError, ValueError):
    """Operands live in polynomial algebras with a different number of variables."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"nvars mismatch: {left} != {right}")
        self.left = left
        self.right = right


class ZeroPolynomialError(ChebyshevError, ValueError):
    """The zero polynomial has no (total) degree."""


class NotPolynomialError(ChebyshevError):
    """An exact division left a remainder, or a negative x0 power survived clearing."""


class DegenerateRecurrenceError(ChebyshevError, ValueError):
    """A three-term recurrence hit a zero leading denominator."""


class HypergeometricPoleError(ChebyshevError, ValueError):
    """A lower parameter (or a term-ratio denominator) vanishes inside the active range."""


class NonTerminatingSeriesError(ChebyshevError, ValueError):
    """No upper parameter is a nonpositive integer and no term count was supplied."""


class ClosedFormMismatchError(ChebyshevError):
    """A closed form disagrees with the iterated-derivation / Dixmier oracle."""

    def __init__(self, what: str, closed: MultiPoly, oracle: MultiPoly) -> None:
        super().__init__(f"{what}: closed form {closed} != oracle {oracle}")
        self.what = what
        self.closed = closed
        self.oracle = oracle
