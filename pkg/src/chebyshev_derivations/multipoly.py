"""Sparse multivariate polynomials in x_0..x_n, Laurent in x_0 only.

Terms are kept in a dict keyed by exponent tuples of fixed length ``nvars``. Only
position 0 of an exponent tuple may be negative; that is the localization at x_0 the
Dixmier map needs for lambda = -x_1/x_0.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from chebyshev_derivations.exactnum import RationalLike, as_rational, format_rational
from chebyshev_derivations.exceptions import (
    NotPolynomialError,
    VariableCountError,
    ZeroPolynomialError,
)
from chebyshev_derivations.unipoly import UniPoly

Exponents = tuple[int, ...]


def graded_lex_key(exps: Exponents) -> tuple[int, Exponents]:
    """Sort key for graded-lex order with x_n the most significant variable."""
    return (sum(exps), tuple(reversed(exps)))


class MultiPoly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, RationalLike] | None = None) -> None:
        if nvars < 1:
            raise ValueError(f"nvars must be positive, got {nvars}")
        self._nvars = nvars
        self._terms: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            self._accumulate(tuple(exps), as_rational(coeff))

    def _accumulate(self, exps: Exponents, coeff: Fraction) -> None:
        if len(exps) != self._nvars:
            raise ValueError(f"exponent vector {exps} does not have length {self._nvars}")
        if any(e < 0 for e in exps[1:]):
            raise ValueError(f"only x0 may carry a negative exponent: {exps}")
        if coeff == 0:
            return
        total = self._terms.get(exps, Fraction(0)) + coeff
        if total == 0:
            del self._terms[exps]
        else:
            self._terms[exps] = total

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict[Exponents, Fraction]) -> MultiPoly:
        poly = cls.__new__(cls)
        poly._nvars = nvars
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: RationalLike) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> MultiPoly:
        if not 0 <= index < nvars:
            raise IndexError(f"x{index} is not a generator of a {nvars}-variable algebra")
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, powers: Mapping[int, int], coeff: RationalLike = 1) -> MultiPoly:
        """Monomial from an ``{index: power}`` map, e.g. ``{1: 2, 0: -1}`` for x1^2/x0."""
        exps = [0] * nvars
        for index, power in powers.items():
            exps[index] += power
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def linear_form(cls, nvars: int, coeffs: Mapping[int, RationalLike]) -> MultiPoly:
        """Sum of ``coeff * x_index``."""
        terms: dict[Exponents, RationalLike] = {}
        for index, coeff in coeffs.items():
            exps = [0] * nvars
            exps[index] = 1
            terms[tuple(exps)] = coeff
        return cls(nvars, terms)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order (x_n highest)."""
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def _check(self, other: MultiPoly) -> None:
        if other._nvars != self._nvars:
            raise VariableCountError(self._nvars, other._nvars)

    def _lift(self, other: MultiPoly | RationalLike) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self._nvars, other)

    def __add__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        other = self._lift(other)
        result = MultiPoly._from_clean(self._nvars, dict(self._terms))
        for exps, coeff in other._terms.items():
            result._accumulate(exps, coeff)
        return result

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._from_clean(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: RationalLike) -> MultiPoly:
        return self._lift(other) - self

    def scale(self, c: RationalLike) -> MultiPoly:
        c = as_rational(c)
        if c == 0:
            return MultiPoly.zero(self._nvars)
        return MultiPoly._from_clean(self._nvars, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other: MultiPoly | RationalLike) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        result = MultiPoly.zero(self._nvars)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result._accumulate(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            raise ValueError("use a Laurent monomial for negative powers")
        result = MultiPoly.constant(self._nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self})"

    def __str__(self) -> str:
        from chebyshev_derivations.render import multipoly_text

        return multipoly_text(self)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no total degree")
        return max(sum(exps) for exps in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(exps) for exps in self._terms}
        if len(degrees) > 1:
            return False
        return degree is None or not degrees or degrees == {degree}

    def min_x0_exponent(self) -> int:
        return min((exps[0] for exps in self._terms), default=0)

    def has_negative_exponents(self) -> bool:
        return self.min_x0_exponent() < 0

    def variables(self) -> set[int]:
        """Indices of the generators that actually occur."""
        return {i for exps in self._terms for i, e in enumerate(exps) if e != 0}

    def partial(self, index: int) -> MultiPoly:
        """Formal partial derivative; the power rule also covers negative x0 powers."""
        if not 0 <= index < self._nvars:
            raise IndexError(f"x{index} is not a generator of a {self._nvars}-variable algebra")
        result: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            power = exps[index]
            if power == 0:
                continue
            lowered = list(exps)
            lowered[index] = power - 1
            result[tuple(lowered)] = coeff * power
        return MultiPoly._from_clean(self._nvars, result)

    def clear_x0(self, power: int) -> MultiPoly:
        """Multiply by x0^power."""
        return self * MultiPoly.variable(self._nvars, 0, power)

    def substitute(self, substitution: Substitution) -> UniPoly:
        return mp_substitute(self, substitution)

    def to_json(self) -> dict[str, Any]:
        return {
            "nvars": self._nvars,
            "terms": [
                {"coeff": format_rational(coeff), "exps": list(exps)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> MultiPoly:
        nvars = int(data["nvars"])
        poly = cls(nvars)
        for term in data["terms"]:
            poly._accumulate(tuple(int(e) for e in term["exps"]), Fraction(term["coeff"]))
        return poly


@dataclass(frozen=True)
class Substitution:
    """Images of the generators: ``images[i]`` replaces x_i."""

    images: tuple[UniPoly, ...]

    @classmethod
    def of(cls, images: Iterable[UniPoly]) -> Substitution:
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)


def _divide_exact(numerator: UniPoly, divisor: UniPoly) -> UniPoly:
    """Long division that insists on a zero remainder."""
    if divisor.is_zero():
        raise NotPolynomialError("division by the zero image of x0")
    remainder = list(numerator.coeffs)
    lead = divisor.coeffs[-1]
    shift = len(divisor.coeffs) - 1
    quotient = [Fraction(0)] * max(len(remainder) - shift, 0)
    for top in range(len(remainder) - 1, shift - 1, -1):
        factor = remainder[top] / lead
        if factor == 0:
            continue
        quotient[top - shift] = factor
        for j, d in enumerate(divisor.coeffs):
            remainder[top - shift + j] -= factor * d
    if any(c != 0 for c in remainder):
        raise NotPolynomialError(f"{numerator} is not divisible by {divisor}")
    return UniPoly(quotient)


def mp_add(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f + g


def mp_mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f * g


def mp_scale(f: MultiPoly, c: RationalLike) -> MultiPoly:
    return f.scale(c)


def mp_total_degree(f: MultiPoly) -> int:
    return f.total_degree()


def mp_partial(f: MultiPoly, i: int) -> MultiPoly:
    return f.partial(i)


def mp_substitute(f: MultiPoly, s: Substitution) -> UniPoly:
    """Replace every x_i by ``s.images[i]`` and expand exactly.

    Negative x0 powers are cleared by multiplying through with x0^e and dividing the
    expanded numerator by ``images[0]^e``; a nonzero remainder raises
    :class:`NotPolynomialError`.
    """
    if len(s.images) < f.nvars:
        raise VariableCountError(f.nvars, len(s.images))
    shift = max(-f.min_x0_exponent(), 0)
    powers: dict[tuple[int, int], UniPoly] = {}

    def power_of(index: int, exponent: int) -> UniPoly:
        key = (index, exponent)
        if key not in powers:
            powers[key] = s.images[index] ** exponent
        return powers[key]

    numerator = UniPoly()
    for exps, coeff in f.terms.items():
        term = UniPoly.constant(coeff)
        for index, exponent in enumerate(exps):
            if index == 0:
                exponent += shift
            if exponent:
                term = term * power_of(index, exponent)
        numerator = numerator + term
    if shift == 0:
        return numerator
    return _divide_exact(numerator, s.images[0] ** shift)
