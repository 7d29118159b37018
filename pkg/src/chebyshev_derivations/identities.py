"""Polynomial identities obtained from the Cayley elements.

Each verifier builds its left-hand side straight from the printed sums (with the
corrections listed in ERRATA.md), never from the substituted Cayley element, and
reports the constant it reduces to.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import structlog

from chebyshev_derivations.exactnum import (
    binomial_rat,
    cheb_constant,
    falling_factorial,
    pochhammer,
    sign,
)
from chebyshev_derivations.families import (
    family,
    family_substitution,
    jacobi_P,
)
from chebyshev_derivations.models import IdentityId, IdentityReport, Kind
from chebyshev_derivations.multipoly import MultiPoly, mp_substitute
from chebyshev_derivations.unipoly import UniPoly, up_sum

logger = structlog.get_logger(__name__)

X = UniPoly.x()
HALF = Fraction(1, 2)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"identities are stated for n >= 1, got {n}")


def substitute_family(f: MultiPoly, kind: Kind) -> UniPoly:
    """Evaluate f at x_i = T_i(x) (first kind) or x_i = U_i(x) (second kind)."""
    return mp_substitute(f, family_substitution(kind, f.nvars - 1))


def expected_constant(identity_id: IdentityId, n: int) -> Fraction:
    """The constant each identity must reduce to."""
    base = cheb_constant(n)
    if identity_id is IdentityId.T_II:
        return base / n
    if identity_id is IdentityId.T_III:
        return pochhammer(HALF, n) / factorial(n) * base
    if identity_id is IdentityId.U_III:
        return binomial_rat(n + HALF, n) * base
    return base


def first_kind_inner_sum(n: int, m: int) -> UniPoly:
    """sum_i (-2)^(n-m-2i) / (n-i) C(n-i, m+i) C(n-m-i-1, i) x^(n-m-2i).

    C(n-m-i-1, i) is the generalized binomial, so C(-1, 0) = 1 at m = n.
    """
    terms = []
    for i in range((n - m) // 2 + 1):
        power = n - m - 2 * i
        coeff = (
            Fraction((-2) ** power, n - i)
            * comb(n - i, m + i)
            * binomial_rat(n - m - i - 1, i)
        )
        terms.append(UniPoly.monomial(coeff, power))
    return up_sum(terms)


def second_kind_inner_sum(n: int, m: int) -> UniPoly:
    """sum_i (-1)^(n-m-2i) (m+1)/(i+m+1) C(n-i, m+i) C(n-m-i-1, i) (2x)^(n-m-2i)."""
    terms = []
    for i in range((n - m) // 2 + 1):
        power = n - m - 2 * i
        coeff = (
            sign(power)
            * Fraction(m + 1, i + m + 1)
            * comb(n - i, m + i)
            * binomial_rat(n - m - i - 1, i)
            * 2 ** power
        )
        terms.append(UniPoly.monomial(coeff, power))
    return up_sum(terms)


def first_kind_parity_sum(n: int) -> UniPoly:
    """n sum_k ((-2)^k / k!) [n-k even] / 2 ((n+k)/2-1)^(k-1) C((n+k)/2-1, k-1) x^k."""
    terms = []
    for k in range(1, n + 1):
        if (n - k) % 2:
            continue
        top = (n + k) // 2 - 1
        weight = falling_factorial(top, k - 1) * comb(top, k - 1)
        terms.append(UniPoly.monomial(Fraction(n * (-2) ** k, factorial(k)) * weight / 2, k))
    return up_sum(terms)


def first_kind_reindexed_parity_sum(n: int) -> UniPoly:
    """sum_k (1+(-1)^(n-k)) k (-2)^k / (n+k)^2 C((n+k)/2, k)^2 x^k."""
    terms = []
    for k in range(1, n + 1):
        if (n - k) % 2:
            continue
        half = (n + k) // 2
        coeff = Fraction(2 * k * (-2) ** k, (n + k) ** 2) * comb(half, k) ** 2
        terms.append(UniPoly.monomial(coeff, k))
    return up_sum(terms)


def build_report(identity_id: IdentityId, n: int, residual: UniPoly) -> IdentityReport:
    report = IdentityReport.from_residual(
        identity_id, n, residual, expected_constant(identity_id, n)
    )
    if not report.passed:
        logger.warning("identity_failed", identity=identity_id.value, n=n, residual=str(residual))
    return report


def verify_T_i(n: int) -> IdentityReport:
    """T_n + n sum_k (-2 T_1)^k sum_i C(n-i, k) C(k+i-1, k-1) / (n-i) T_{n-k-2i}
    minus the parity-gated sum equals cos(pi n / 2).
    """
    _check_n(n)
    minus_two_t1 = family(Kind.FIRST, 1) * -2
    lhs = family(Kind.FIRST, n)
    for k in range(1, n + 1):
        inner = up_sum(
            family(Kind.FIRST, n - k - 2 * i)
            * (Fraction(comb(n - i, k), n - i) * comb(k + i - 1, k - 1))
            for i in range((n - k) // 2 + 1)
        )
        lhs = lhs + minus_two_t1 ** k * inner * n
    return build_report(IdentityId.T_I, n, lhs - first_kind_parity_sum(n))


def verify_T_ii(n: int) -> IdentityReport:
    """sum_m (inner sum) T_m minus the re-indexed parity sum equals cos(pi n / 2) / n."""
    _check_n(n)
    lhs = up_sum(first_kind_inner_sum(n, m) * family(Kind.FIRST, m) for m in range(n + 1))
    return build_report(IdentityId.T_II, n, lhs - first_kind_reindexed_parity_sum(n))


def verify_T_iii(n: int) -> IdentityReport:
    """The Jacobi form: the Taylor expansion of T_n about x, evaluated at 0."""
    _check_n(n)
    lhs = jacobi_P(n, -HALF, -HALF)
    for k in range(1, n + 1):
        coeff = Fraction(factorial(n + k - 1), factorial(k) * 2 ** k * factorial(n - 1))
        lhs = lhs + (-X) ** k * jacobi_P(n - k, k - HALF, k - HALF) * coeff
    return build_report(IdentityId.T_III, n, lhs)


def verify_U_i(n: int) -> IdentityReport:
    _check_n(n)
    minus_u1 = -family(Kind.SECOND, 1)
    lhs = family(Kind.SECOND, n)
    for k in range(1, n + 1):
        inner = up_sum(
            family(Kind.SECOND, n - k - 2 * i)
            * (comb(n - i, k - 1) * comb(k + i - 1, k - 1) * (n - k - 2 * i + 1))
            for i in range((n - k) // 2 + 1)
        )
        lhs = lhs + minus_u1 ** k * inner * Fraction(1, k)
    return build_report(IdentityId.U_I, n, lhs)


def verify_U_ii(n: int) -> IdentityReport:
    _check_n(n)
    lhs = up_sum(second_kind_inner_sum(n, m) * family(Kind.SECOND, m) for m in range(n + 1))
    return build_report(IdentityId.U_II, n, lhs)


def verify_U_iii(n: int) -> IdentityReport:
    _check_n(n)
    lhs = jacobi_P(n, HALF, HALF) * (n + 1)
    for k in range(1, n + 1):
        coeff = Fraction(factorial(n + k + 1), factorial(k) * 2 ** k * factorial(n))
        lhs = lhs + (-X) ** k * jacobi_P(n - k, k + HALF, k + HALF) * coeff
    return build_report(IdentityId.U_III, n, lhs)


def taylor_shift(kind: Kind, n: int) -> UniPoly:
    """sum_k P^(k)(x) (-x)^k / k! for P = T_n or U_n; Taylor's formula makes it P(0)."""
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    derivative = family(kind, n)
    total = UniPoly()
    for k in range(n + 1):
        total = total + derivative * (-X) ** k * Fraction(1, factorial(k))
        derivative = derivative.derivative()
    return total


def taylor_shift_constant(kind: Kind, n: int) -> Fraction | None:
    return taylor_shift(kind, n).constant_value()
