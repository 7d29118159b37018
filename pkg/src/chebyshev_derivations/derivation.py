"""Chebyshev derivations D_T and D_U, their iterates, and the Dixmier map."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import structlog

from chebyshev_derivations.exceptions import NotPolynomialError, VariableCountError
from chebyshev_derivations.exactnum import sign
from chebyshev_derivations.models import DixmierElement, Kind, LambdaKind
from chebyshev_derivations.multipoly import MultiPoly

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Derivation:
    """A derivation of Q[x_0, ..., x_{nvars-1}] given by the images of the generators.

    ``images[i]`` is D(x_i); D acts on any polynomial by sum_i (df/dx_i) * D(x_i),
    which is the Leibniz rule, and on negative x_0 powers by the quotient rule.
    """

    images: tuple[MultiPoly, ...]
    kind: Kind | None = None

    def __post_init__(self) -> None:
        if not self.images:
            raise ValueError("a derivation needs at least one generator")
        for image in self.images:
            if image.nvars != len(self.images):
                raise VariableCountError(len(self.images), image.nvars)

    @property
    def nvars(self) -> int:
        return len(self.images)

    def image(self, index: int) -> MultiPoly:
        return self.images[index]

    def apply(self, f: MultiPoly) -> MultiPoly:
        if f.nvars != self.nvars:
            raise VariableCountError(self.nvars, f.nvars)
        result = MultiPoly.zero(self.nvars)
        for index in f.variables():
            image = self.images[index]
            if not image.is_zero():
                result = result + f.partial(index) * image
        return result

    def power(self, f: MultiPoly, k: int) -> MultiPoly:
        """D^k(f); stops early once the iterate vanishes."""
        if k < 0:
            raise ValueError(f"k must be natural, got {k}")
        for _ in range(k):
            if f.is_zero():
                break
            f = self.apply(f)
        return f

    def is_triangular(self) -> bool:
        """Every D(x_i) involves only generators x_j with j < i."""
        return all(
            all(j < i for j in image.variables()) for i, image in enumerate(self.images)
        )

    def is_linear(self) -> bool:
        """Every image is a linear form (zero included)."""
        return all(image.is_zero() or image.is_homogeneous(1) for image in self.images)

    def is_weitzenbock(self) -> bool:
        """Linear and triangular, hence linear and locally nilpotent."""
        return self.is_linear() and self.is_triangular()

    def nilpotency_index(self, f: MultiPoly, limit: int | None = None) -> int | None:
        """Least m with D^m(f) = 0, or ``None`` if none is found up to ``limit``."""
        if limit is None:
            degree = max(1, f.total_degree()) if not f.is_zero() else 0
            limit = degree * self.nvars + 1
        current = f
        for m in range(limit + 1):
            if current.is_zero():
                return m
            current = self.apply(current)
        return None


def _first_kind_image(nvars: int, m: int) -> MultiPoly:
    coeffs: dict[int, Fraction] = {
        m - k: Fraction(m * (1 - sign(k))) for k in range(1, m) if sign(k) == -1
    }
    if m % 2 == 1:
        coeffs[0] = coeffs.get(0, Fraction(0)) + m
    return MultiPoly.linear_form(nvars, coeffs)


def _second_kind_image(nvars: int, m: int) -> MultiPoly:
    return MultiPoly.linear_form(
        nvars,
        {k: (1 + sign(m - k + 1)) * (k + 1) for k in range(m) if sign(m - k + 1) == 1},
    )


def make_derivation_T(n: int) -> Derivation:
    """D_T on x_0..x_n: D_T(x_m) = m (sum_{k=1}^{m-1} (1-(-1)^k) x_{m-k} + (1-(-1)^m)/2 x_0)."""
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    nvars = n + 1
    return Derivation(tuple(_first_kind_image(nvars, m) for m in range(nvars)), Kind.FIRST)


def make_derivation_U(n: int) -> Derivation:
    """D_U on x_0..x_n: D_U(x_m) = sum_{k=0}^{m-1} (1+(-1)^(m-k+1)) (k+1) x_k."""
    if n < 0:
        raise ValueError(f"n must be natural, got {n}")
    nvars = n + 1
    return Derivation(tuple(_second_kind_image(nvars, m) for m in range(nvars)), Kind.SECOND)


def make_derivation(kind: Kind, n: int) -> Derivation:
    return make_derivation_T(n) if kind is Kind.FIRST else make_derivation_U(n)


def apply(derivation: Derivation, f: MultiPoly) -> MultiPoly:
    return derivation.apply(f)


def apply_power(derivation: Derivation, f: MultiPoly, k: int) -> MultiPoly:
    return derivation.power(f, k)


def is_in_kernel(derivation: Derivation, f: MultiPoly) -> bool:
    return derivation.apply(f).is_zero()


def lambda_scale(kind: Kind) -> Fraction:
    """Coefficient c in lambda = c * x_1 / x_0 with D(lambda) = -1."""
    return Fraction(-1) if kind is Kind.FIRST else Fraction(-1, 2)


def dixmier_sigma(kind: Kind, n: int) -> DixmierElement:
    """x_0^(n-1) * sum_{k=0}^{n} D^k(x_n) lambda^k / k!.

    lambda^k is carried as the Laurent monomial c^k x_1^k x_0^(-k); the sum stops at
    k = n because D^(n+1)(x_n) = 0.
    """
    if n < 1:
        raise ValueError(f"the Dixmier element needs n >= 1, got {n}")
    derivation = make_derivation(kind, n)
    nvars = n + 1
    scale = lambda_scale(kind)
    total = MultiPoly.zero(nvars)
    iterate = MultiPoly.variable(nvars, n)
    for k in range(n + 1):
        if iterate.is_zero():
            break
        lam_power = MultiPoly.monomial(nvars, {1: k, 0: -k}, scale ** k / factorial(k))
        total = total + iterate * lam_power
        iterate = derivation.apply(iterate)
    value = total.clear_x0(n - 1)
    if value.has_negative_exponents():
        raise NotPolynomialError(
            f"x0^{n - 1} * sigma(x{n}) still has x0^{value.min_x0_exponent()}"
        )
    logger.debug("dixmier_sigma", kind=kind.value, n=n, terms=len(value))
    lambda_kind = LambdaKind.FIRST if kind is Kind.FIRST else LambdaKind.SECOND
    return DixmierElement(n=n, kind=kind, value=value, lambda_kind=lambda_kind)


def check_lambda_normalization(kind: Kind, n: int) -> bool:
    """D(lambda) = -1, stated as x_0 D(x_1) - x_1 D(x_0) = c x_0^2 with c = 1 or 2."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    derivation = make_derivation(kind, n)
    x0 = MultiPoly.variable(n + 1, 0)
    x1 = MultiPoly.variable(n + 1, 1)
    lhs = x0 * derivation.apply(x1) - x1 * derivation.apply(x0)
    c = 1 if kind is Kind.FIRST else 2
    return lhs == (x0 * x0).scale(c)
