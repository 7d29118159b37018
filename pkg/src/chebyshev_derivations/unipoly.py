"""Dense univariate polynomials over the rationals in the indeterminate x."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any

from chebyshev_derivations.exactnum import RationalLike, as_rational, format_rational
from chebyshev_derivations.exceptions import NotPolynomialError


class UniPoly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are stripped on construction, so the zero polynomial is the empty
    tuple and :attr:`degree` is ``None`` for it.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: RationalLike) -> UniPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, coeff: RationalLike, power: int) -> UniPoly:
        if power < 0:
            raise ValueError(f"negative power {power} in a univariate polynomial")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __add__(self, other: UniPoly | RationalLike) -> UniPoly:
        other = _lift(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other: UniPoly | RationalLike) -> UniPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: RationalLike) -> UniPoly:
        return _lift(other) - self

    def __mul__(self, other: UniPoly | RationalLike) -> UniPoly:
        if not isinstance(other, UniPoly):
            scalar = as_rational(other)
            return UniPoly(c * scalar for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return UniPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = UniPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UniPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        from chebyshev_derivations.render import unipoly_text

        return unipoly_text(self)

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def evaluate(self, value: RationalLike) -> Fraction:
        """Horner evaluation."""
        value = as_rational(value)
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def constant_value(self) -> Fraction | None:
        """The constant if ``deg <= 0`` (zero included), otherwise ``None``."""
        if len(self._coeffs) <= 1:
            return self.coefficient(0)
        return None

    def divide_by_x_power(self, power: int) -> UniPoly:
        """Exact division by x^power; a nonzero low coefficient is an error."""
        if any(c != 0 for c in self._coeffs[:power]):
            raise NotPolynomialError(f"{self} is not divisible by x^{power}")
        return UniPoly(self._coeffs[power:])

    def to_json(self) -> dict[str, Any]:
        return {"coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> UniPoly:
        return cls(Fraction(c) for c in data["coeffs"])


def _lift(value: UniPoly | RationalLike) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def up_add(p: UniPoly, q: UniPoly) -> UniPoly:
    return p + q


def up_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    return p * q


def up_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def up_eval(p: UniPoly, v: RationalLike) -> Fraction:
    return p.evaluate(v)


def up_is_constant(p: UniPoly) -> Fraction | None:
    return p.constant_value()


def up_sum(polys: Sequence[UniPoly] | Iterable[UniPoly]) -> UniPoly:
    total = UniPoly()
    for p in polys:
        total = total + p
    return total
