"""Exact rational scalars and the combinatorial helpers used by every formula.

All arithmetic is carried in :class:`fractions.Fraction`, which is always stored in
lowest terms with a positive denominator. Nothing in this module touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction
RationalLike = Fraction | int


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: RationalLike) -> str:
    """Render as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    return str(as_rational(value))


def _check_count(name: str, m: int) -> None:
    if m < 0:
        raise ValueError(f"{name} must be a natural number, got {m}")


def falling_factorial(a: RationalLike, m: int) -> Fraction:
    """a (a-1) ... (a-m+1); the empty product is 1."""
    _check_count("m", m)
    a = as_rational(a)
    result = Fraction(1)
    for j in range(m):
        result *= a - j
    return result


def binomial_rat(a: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient by the product formula, exact for any rational a."""
    _check_count("k", k)
    return falling_factorial(a, k) / factorial(k)


def pochhammer(a: RationalLike, m: int) -> Fraction:
    """Rising product a (a+1) ... (a+m-1)."""
    _check_count("m", m)
    a = as_rational(a)
    result = Fraction(1)
    for j in range(m):
        result *= a + j
    return result


def cheb_constant(n: int) -> Fraction:
    """cos(pi n / 2) by case analysis on n mod 4."""
    _check_count("n", n)
    residue = n % 4
    if residue == 0:
        return Fraction(1)
    if residue == 2:
        return Fraction(-1)
    return Fraction(0)


def sign(power: int) -> int:
    """(-1)^power."""
    return -1 if power % 2 else 1
