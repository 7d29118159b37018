"""Terminating 4F3 series behind the re-indexed identities.

The identity checks never evaluate Pochhammer symbols at the half-integer parameter
array. Each series is rebuilt from its first term and the term ratio instead; every
ratio is a rational constant times x^(-2), so a step is a scalar multiple followed by
an exact division by x^2. ``pfq_terminating`` is the independent evaluator used to
spot-check the same series at rational points.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import structlog

from chebyshev_derivations.exactnum import RationalLike, as_rational
from chebyshev_derivations.exceptions import HypergeometricPoleError, NonTerminatingSeriesError
from chebyshev_derivations.families import family
from chebyshev_derivations.identities import build_report, first_kind_reindexed_parity_sum
from chebyshev_derivations.models import IdentityId, IdentityReport, Kind
from chebyshev_derivations.unipoly import UniPoly, up_sum

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class TermRatioSeries:
    """a_0 + a_1 + ... with a_{i+1} = ratios[i] * a_i / x^2."""

    kind: Kind
    n: int
    k: int
    first_term: UniPoly
    num_terms: int
    ratios: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.ratios) != self.num_terms - 1:
            raise ValueError(
                f"{self.num_terms} terms need {self.num_terms - 1} ratios, got {len(self.ratios)}"
            )


def _check_range(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"series needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")


def _ratio(n: int, k: int, i: int, denominator: int) -> Fraction:
    if denominator == 0:
        raise HypergeometricPoleError(f"term ratio denominator vanishes at n={n}, k={k}, i={i}")
    p = n - k - 2 * i
    return Fraction(p * (p - 1) ** 2 * (p - 2), 4 * denominator)


def build_series_T(n: int, k: int) -> TermRatioSeries:
    """Inner sum of the first-kind identity, a_0 = C(n, k) / n (-2x)^(n-k)."""
    _check_range(n, k)
    num_terms = (n - k) // 2 + 1
    ratios = tuple(
        _ratio(n, k, i, (n - i - 1) * (k + i + 1) * (i + 1) * (n - k - i - 1))
        for i in range(num_terms - 1)
    )
    first = UniPoly.monomial(Fraction(comb(n, k) * (-2) ** (n - k), n), n - k)
    return TermRatioSeries(Kind.FIRST, n, k, first, num_terms, ratios)


def build_series_U(n: int, k: int) -> TermRatioSeries:
    """Inner sum of the second-kind identity, a_0 = C(n, k) (-2x)^(n-k)."""
    _check_range(n, k)
    num_terms = (n - k) // 2 + 1
    ratios = tuple(
        _ratio(n, k, i, (i + k + 2) * (n - i) * (i + 1) * (n - k - i - 1))
        for i in range(num_terms - 1)
    )
    first = UniPoly.monomial(comb(n, k) * (-2) ** (n - k), n - k)
    return TermRatioSeries(Kind.SECOND, n, k, first, num_terms, ratios)


def build_series(kind: Kind, n: int, k: int) -> TermRatioSeries:
    return build_series_T(n, k) if kind is Kind.FIRST else build_series_U(n, k)


def expand_series(series: TermRatioSeries) -> UniPoly:
    term = series.first_term
    total = term
    for ratio in series.ratios:
        term = (term * ratio).divide_by_x_power(2)
        total = total + term
    return total


def verify_hypergeom_T(n: int) -> IdentityReport:
    """sum_k n 4F3-series(n, k) T_k minus n times the parity sum equals cos(pi n / 2)."""
    if n < 1:
        raise ValueError(f"identities are stated for n >= 1, got {n}")
    lhs = up_sum(
        expand_series(build_series_T(n, k)) * family(Kind.FIRST, k) * n for k in range(n + 1)
    )
    return build_report(IdentityId.HG_T, n, lhs - first_kind_reindexed_parity_sum(n) * n)


def verify_hypergeom_U(n: int) -> IdentityReport:
    if n < 1:
        raise ValueError(f"identities are stated for n >= 1, got {n}")
    lhs = up_sum(expand_series(build_series_U(n, k)) * family(Kind.SECOND, k) for k in range(n + 1))
    return build_report(IdentityId.HG_U, n, lhs)


def hypergeom_parameters(kind: Kind, n: int, k: int) -> tuple[list[Fraction], list[Fraction]]:
    """Upper and lower 4F3 parameters; the argument is 4 / x^2.

    (k-n)/2 + 1/2 appears twice among the upper parameters, matching the squared
    factor in the term ratio.
    """
    _check_range(n, k)
    a = Fraction(k - n, 2)
    upper = [a, a + 1, a + Fraction(1, 2), a + Fraction(1, 2)]
    if kind is Kind.FIRST:
        lower = [Fraction(1 - n), Fraction(k + 1), Fraction(1 - n + k)]
    else:
        lower = [Fraction(-n), Fraction(k + 2), Fraction(1 - n + k)]
    return upper, lower


def _termination_index(upper: Sequence[Fraction]) -> int | None:
    stops = [int(-a) for a in upper if a.denominator == 1 and a <= 0]
    return min(stops) if stops else None


def pfq_terminating(
    upper: Sequence[RationalLike],
    lower: Sequence[RationalLike],
    z: RationalLike,
    terms: int | None = None,
) -> Fraction:
    """sum_j prod (a)_j / prod (b)_j z^j / j!, summed exactly up to termination.

    The series stops at the first nonpositive-integer upper parameter; ``terms``
    bounds the number of summands when no upper parameter does.

    Args:
        upper: Numerator parameters
        lower: Denominator parameters
        z: Argument
        terms: Summand cap for series no upper parameter terminates

    Returns:
        The exact value of the truncated sum

    Raises:
        NonTerminatingSeriesError: No upper parameter stops the series and ``terms`` is None
        HypergeometricPoleError: A lower parameter reaches a nonpositive integer in range
        ValueError: ``terms`` is given but not positive
    """
    tops = [as_rational(a) for a in upper]
    bottoms = [as_rational(b) for b in lower]
    argument = as_rational(z)
    last = _termination_index(tops)
    if terms is not None:
        if terms < 1:
            raise ValueError(f"terms must be positive, got {terms}")
        last = terms - 1 if last is None else min(last, terms - 1)
    if last is None:
        raise NonTerminatingSeriesError(f"no upper parameter in {tops} terminates the series")
    term = Fraction(1)
    total = term
    for j in range(last):
        numerator = Fraction(1)
        for a in tops:
            numerator *= a + j
        denominator = Fraction(1)
        for b in bottoms:
            if b + j == 0:
                raise HypergeometricPoleError(f"lower parameter {b} reaches a pole at j={j}")
            denominator *= b + j
        term = term * numerator / denominator * argument / (j + 1)
        total += term
    logger.debug("pfq_evaluated", upper=[str(a) for a in tops], terms=last + 1)
    return total


def series_at(kind: Kind, n: int, k: int, x: RationalLike) -> Fraction:
    """a_0(x) * 4F3(params; 4 / x^2) evaluated through :func:`pfq_terminating`."""
    x = as_rational(x)
    if x == 0:
        raise ValueError("the series argument 4 / x^2 needs x != 0")
    upper, lower = hypergeom_parameters(kind, n, k)
    return build_series(kind, n, k).first_term.evaluate(x) * pfq_terminating(upper, lower, 4 / x**2)
