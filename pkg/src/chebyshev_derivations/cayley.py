"""Closed forms for D^k(x_n) and for the Cayley elements of D_T and D_U.

Every closed form is reconciled against the iterated derivation or the Dixmier map;
the corrected readings are listed in ERRATA.md.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import structlog

from chebyshev_derivations.derivation import apply_power, dixmier_sigma, make_derivation
from chebyshev_derivations.exactnum import falling_factorial
from chebyshev_derivations.exceptions import ClosedFormMismatchError
from chebyshev_derivations.models import CayleyElement, Kind, Method, Source
from chebyshev_derivations.multipoly import MultiPoly

logger = structlog.get_logger(__name__)


def _check_order(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")


def _parity_weight(n: int, k: int) -> Fraction:
    """((n+k)/2 - 1)^(k-1 falling) * C((n+k)/2 - 1, k-1); callers gate on n - k even."""
    top = (n + k) // 2 - 1
    return falling_factorial(top, k - 1) * comb(top, k - 1)


def _slice_term(nvars: int, index: int, k: int, x0_power: int, coeff: Fraction) -> MultiPoly:
    """coeff * x_index * x_1^k * x_0^x0_power; index may itself be 0 or 1."""
    exps = [0] * nvars
    exps[index] += 1
    exps[1] += k
    exps[0] += x0_power
    return MultiPoly(nvars, {tuple(exps): coeff})


def dk_closed_T(n: int, k: int) -> MultiPoly:
    """D_T^k(x_n) = n [2^k sum_i (n-i-1)^(k-1) C(k+i-1, k-1) x_{n-k-2i}
    - [n-k even] 2^(k-1) ((n+k)/2-1)^(k-1) C((n+k)/2-1, k-1) x_0].
    """
    _check_order(n, k)
    nvars = n + 1
    if k == 0:
        return MultiPoly.variable(nvars, n)
    coeffs: dict[int, Fraction] = {}
    for i in range((n - k) // 2 + 1):
        index = n - k - 2 * i
        term = 2 ** k * falling_factorial(n - i - 1, k - 1) * comb(k + i - 1, k - 1)
        coeffs[index] = coeffs.get(index, Fraction(0)) + n * term
    if (n - k) % 2 == 0:
        coeffs[0] = coeffs.get(0, Fraction(0)) - n * 2 ** (k - 1) * _parity_weight(n, k)
    return MultiPoly.linear_form(nvars, coeffs)


def dk_closed_U(n: int, k: int) -> MultiPoly:
    """D_U^k(x_n) = 2^k sum_i (n-i)^(k-1) C(k+i-1, k-1) (n-k-2i+1) x_{n-k-2i}."""
    _check_order(n, k)
    nvars = n + 1
    if k == 0:
        return MultiPoly.variable(nvars, n)
    return MultiPoly.linear_form(
        nvars,
        {
            n - k - 2 * i: 2 ** k
            * falling_factorial(n - i, k - 1)
            * comb(k + i - 1, k - 1)
            * (n - k - 2 * i + 1)
            for i in range((n - k) // 2 + 1)
        },
    )


def dk_closed(kind: Kind, n: int, k: int) -> MultiPoly:
    return dk_closed_T(n, k) if kind is Kind.FIRST else dk_closed_U(n, k)


def verify_dk_closed(kind: Kind, n: int, k: int) -> bool:
    """Compare the closed form with k applications of the derivation to x_n."""
    closed = dk_closed(kind, n, k)
    oracle = apply_power(make_derivation(kind, n), MultiPoly.variable(n + 1, n), k)
    if closed != oracle:
        logger.error(
            "closed_form_mismatch", what=f"D^{k}(x{n})", kind=kind.value,
            closed=str(closed), oracle=str(oracle),
        )
        return False
    return True


def cayley_T_closed(n: int) -> MultiPoly:
    """x_n x_0^(n-1) + sum_{k=1}^{n} ((-2)^k n / k!) (A_k - B_k) x_1^k, where
    A_k = sum_i (n-i-1)^(k-1) C(k+i-1, k-1) x_{n-k-2i} x_0^(n-1-k) and
    B_k = (1+(-1)^(n-k))/4 ((n+k)/2-1)^(k-1) C((n+k)/2-1, k-1) x_0^(n-k).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    nvars = n + 1
    poly = MultiPoly.monomial(nvars, {n: 1, 0: n - 1})
    for k in range(1, n + 1):
        outer = Fraction((-2) ** k * n, factorial(k))
        for i in range((n - k) // 2 + 1):
            coeff = outer * falling_factorial(n - i - 1, k - 1) * comb(k + i - 1, k - 1)
            poly = poly + _slice_term(nvars, n - k - 2 * i, k, n - 1 - k, coeff)
        if (n - k) % 2 == 0:
            coeff = outer * _parity_weight(n, k) / 2
            poly = poly - MultiPoly.monomial(nvars, {1: k, 0: n - k}, coeff)
    return poly


def cayley_U_closed(n: int) -> MultiPoly:
    """x_n x_0^(n-1) + sum_{k=1}^{n} ((-1)^k / k!)
    sum_i (n-i)^(k-1) C(k+i-1, k-1) (n-k-2i+1) x_{n-k-2i} x_1^k x_0^(n-1-k).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    nvars = n + 1
    poly = MultiPoly.monomial(nvars, {n: 1, 0: n - 1})
    for k in range(1, n + 1):
        outer = Fraction((-1) ** k, factorial(k))
        for i in range((n - k) // 2 + 1):
            coeff = (
                outer
                * falling_factorial(n - i, k - 1)
                * comb(k + i - 1, k - 1)
                * (n - k - 2 * i + 1)
            )
            poly = poly + _slice_term(nvars, n - k - 2 * i, k, n - 1 - k, coeff)
    return poly


def _reconcile(kind: Kind, n: int, closed: MultiPoly) -> None:
    oracle = dixmier_sigma(kind, n).value
    if closed != oracle:
        logger.error(
            "closed_form_mismatch", what=f"C_{kind.value}({n})",
            closed=str(closed), oracle=str(oracle),
        )
        raise ClosedFormMismatchError(f"Cayley element of kind {kind.value}, n={n}", closed, oracle)


def cayley_T(n: int, check_oracle: bool = True) -> CayleyElement:
    poly = cayley_T_closed(n)
    if check_oracle:
        _reconcile(Kind.FIRST, n, poly)
    return CayleyElement(n=n, kind=Kind.FIRST, poly=poly, source=Source.CLOSED_FORM)


def cayley_U(n: int, check_oracle: bool = True) -> CayleyElement:
    poly = cayley_U_closed(n)
    if check_oracle:
        _reconcile(Kind.SECOND, n, poly)
    return CayleyElement(n=n, kind=Kind.SECOND, poly=poly, source=Source.CLOSED_FORM)


def cayley_element(kind: Kind, n: int, method: Method = Method.CLOSED) -> CayleyElement:
    """The Cayley element of order n, from the closed form or straight from sigma.

    Args:
        kind: Derivation family
        n: Order, at least 1
        method: ``closed`` reconciles the closed form against sigma; ``dixmier`` skips it

    Returns:
        CayleyElement tagged with the source it came from

    Raises:
        ClosedFormMismatchError: The closed form and sigma disagree
    """
    if method is Method.DIXMIER:
        value = dixmier_sigma(kind, n).value
        return CayleyElement(n=n, kind=kind, poly=value, source=Source.DIXMIER_ORACLE)
    return cayley_T(n) if kind is Kind.FIRST else cayley_U(n)
