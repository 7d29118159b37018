"""Chebyshev T, U and Jacobi polynomials, plus the generating-function checks.

The three-term recurrences are the constructors. The explicit sum for T_n, the
generating functions and the derivative expansions are verification targets only.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from threading import Lock

import structlog

from chebyshev_derivations.exactnum import (
    RationalLike,
    as_rational,
    binomial_rat,
    pochhammer,
    sign,
)
from chebyshev_derivations.exceptions import DegenerateRecurrenceError
from chebyshev_derivations.models import Kind
from chebyshev_derivations.multipoly import Substitution
from chebyshev_derivations.unipoly import UniPoly, up_sum

logger = structlog.get_logger(__name__)

X = UniPoly.x()


class TruncatedSeries:
    """Power series in t with UniPoly coefficients, truncated after t^order."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[UniPoly] = ()) -> None:
        if order < 0:
            raise ValueError(f"order must be natural, got {order}")
        padded = list(coeffs)[: order + 1]
        padded += [UniPoly()] * (order + 1 - len(padded))
        self._order = order
        self._coeffs = tuple(padded)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[UniPoly, ...]:
        return self._coeffs

    def _check(self, other: TruncatedSeries) -> None:
        if other._order != self._order:
            raise ValueError(f"series orders differ: {self._order} != {other._order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self._order, (a + b for a, b in zip(self._coeffs, other._coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        product = [UniPoly()] * (self._order + 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j in range(self._order + 1 - i):
                product[i + j] = product[i + j] + a * other._coeffs[j]
        return TruncatedSeries(self._order, product)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{j}" for j, c in enumerate(self._coeffs) if not c.is_zero())
        return f"TruncatedSeries(order={self._order}, {body or '0'})"


_TABLES: dict[Kind, list[UniPoly]] = {
    Kind.FIRST: [UniPoly.one(), X],
    Kind.SECOND: [UniPoly.one(), X * 2],
}
_TABLES_LOCK = Lock()


def _recurrence_entry(kind: Kind, n: int) -> UniPoly:
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    table = _TABLES[kind]
    with _TABLES_LOCK:
        while len(table) <= n:
            table.append(X * table[-1] * 2 - table[-2])
        return table[n]


def chebyshev_T(n: int) -> UniPoly:
    """T_n by T_{m+1} = 2x T_m - T_{m-1}, T_0 = 1, T_1 = x."""
    return _recurrence_entry(Kind.FIRST, n)


def chebyshev_U(n: int) -> UniPoly:
    """U_n by the same recurrence with U_0 = 1, U_1 = 2x."""
    return _recurrence_entry(Kind.SECOND, n)


def chebyshev_T_explicit(n: int) -> UniPoly:
    """T_n = sum_k C(n, 2k) (x^2 - 1)^k x^(n-2k)."""
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    x_squared_minus_one = X * X - 1
    return up_sum(
        x_squared_minus_one ** k * X ** (n - 2 * k) * comb(n, 2 * k) for k in range(n // 2 + 1)
    )


def family(kind: Kind, n: int) -> UniPoly:
    return chebyshev_T(n) if kind is Kind.FIRST else chebyshev_U(n)


def family_table(kind: Kind, n: int) -> tuple[UniPoly, ...]:
    """P_0, ..., P_n of the requested kind."""
    return tuple(family(kind, m) for m in range(n + 1))


def family_substitution(kind: Kind, n: int) -> Substitution:
    """The evaluation x_i -> T_i(x) (or U_i(x)) for i <= n."""
    return Substitution(family_table(kind, n))


@lru_cache(maxsize=None)
def _jacobi(n: int, alpha: Fraction, beta: Fraction) -> UniPoly:
    if n == 0:
        return UniPoly.one()
    ab = alpha + beta
    first = UniPoly((alpha + 1 - (ab + 2) / 2, (ab + 2) / 2))
    if n == 1:
        return first
    previous, current = UniPoly.one(), first
    for m in range(2, n + 1):
        denominator = 2 * m * (m + ab) * (2 * m + ab - 2)
        if denominator == 0:
            raise DegenerateRecurrenceError(
                f"Jacobi recurrence denominator vanishes at m={m}, alpha={alpha}, beta={beta}"
            )
        linear = UniPoly(
            (alpha * alpha - beta * beta, (2 * m + ab) * (2 * m + ab - 2))
        ) * (2 * m + ab - 1)
        tail = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + ab)
        following = (linear * current - previous * tail) * (1 / denominator)
        previous, current = current, following
    return current


def jacobi_P(n: int, alpha: RationalLike, beta: RationalLike) -> UniPoly:
    """P_n^(alpha, beta) by the standard three-term recurrence in exact arithmetic."""
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha <= -1 or beta <= -1:
        raise ValueError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    return _jacobi(n, alpha, beta)


def chebyshev_derivative_jacobi(kind: Kind, n: int, k: int) -> UniPoly:
    """d^k/dx^k of T_n or U_n written through P_{n-k}^(k -/+ 1/2, k -/+ 1/2)."""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be natural, got n={n}, k={k}")
    if k > n:
        return UniPoly()
    half = Fraction(1, 2)
    if kind is Kind.FIRST:
        if n == 0:
            return UniPoly.one()
        scale = (
            Fraction(factorial(n)) / pochhammer(half, n)
            * Fraction(factorial(n + k - 1), 2 ** k * factorial(n - 1))
        )
        return jacobi_P(n - k, k - half, k - half) * scale
    scale = Fraction(factorial(n + k + 1), 2 ** k * factorial(n)) / binomial_rat(n + half, n)
    return jacobi_P(n - k, k + half, k + half) * scale


def generating_function_target(kind: Kind, order: int) -> TruncatedSeries:
    """Numerator of the generating function: 1 - x t (first kind) or 1 (second kind)."""
    if kind is Kind.FIRST:
        return TruncatedSeries(order, (UniPoly.one(), -X))
    return TruncatedSeries(order, (UniPoly.one(),))


def verify_genfun(kind: Kind, order: int) -> bool:
    """(1 - 2xt + t^2) * sum_{n<=M} P_n t^n equals the numerator through t^M."""
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    denominator = TruncatedSeries(order, (UniPoly.one(), X * -2, UniPoly.one()))
    series = TruncatedSeries(order, family_table(kind, order))
    holds = denominator * series == generating_function_target(kind, order)
    logger.debug("genfun_checked", kind=kind.value, order=order, passed=holds)
    return holds


def derivative_expansion(kind: Kind, n: int) -> list[UniPoly]:
    """Right-hand sides of d/dx P_n expressed in the family itself.

    First kind: n (sum_{k=1}^{n-1} (1-(-1)^k) T_{n-k} + (1-(-1)^n)/2 T_0).
    Second kind, two equivalent forms:
    sum_{k=1}^{n} (1-(-1)^k)(n-k+1) U_{n-k} and sum_{k<=n/2} 2(n-2k) U_{n-2k-1},
    where U_{-1} = 0 (its coefficient vanishes anyway).
    """
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    if kind is Kind.FIRST:
        inner = up_sum(chebyshev_T(n - k) * (1 - sign(k)) for k in range(1, n))
        inner = inner + chebyshev_T(0) * Fraction(1 - sign(n), 2)
        return [inner * n]
    odd_steps = up_sum(chebyshev_U(n - k) * ((1 - sign(k)) * (n - k + 1)) for k in range(1, n + 1))
    halved = up_sum(
        chebyshev_U(n - 2 * k - 1) * (2 * (n - 2 * k))
        for k in range(n // 2 + 1)
        if n - 2 * k - 1 >= 0
    )
    return [odd_steps, halved]


def verify_derivative_expansion(kind: Kind, n: int) -> bool:
    """d/dx P_n equals every form returned by :func:`derivative_expansion`."""
    derivative = family(kind, n).derivative()
    holds = all(rhs == derivative for rhs in derivative_expansion(kind, n))
    logger.debug("derivative_expansion_checked", kind=kind.value, n=n, passed=holds)
    return holds
