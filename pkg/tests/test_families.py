"""Tests for the Chebyshev and Jacobi families."""

from fractions import Fraction

import pytest

import chebyshev_derivations.families as families_module
from chebyshev_derivations.exactnum import cheb_constant
from chebyshev_derivations.exceptions import DegenerateRecurrenceError
from chebyshev_derivations.families import (
    TruncatedSeries,
    _jacobi,
    chebyshev_derivative_jacobi,
    chebyshev_T,
    chebyshev_T_explicit,
    chebyshev_U,
    derivative_expansion,
    family_table,
    jacobi_P,
    verify_derivative_expansion,
    verify_genfun,
)
from chebyshev_derivations.models import Kind
from chebyshev_derivations.unipoly import UniPoly

X = UniPoly.x()


def test_low_order_polynomials():
    assert chebyshev_T(4) == UniPoly([1, 0, -8, 0, 8])
    assert chebyshev_U(3) == UniPoly([0, -4, 0, 8])
    assert chebyshev_T(0) == chebyshev_U(0) == UniPoly.one()
    assert [str(p) for p in family_table(Kind.SECOND, 2)] == ["1", "2*x", "4*x^2 - 1"]


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        chebyshev_T(-1)
    with pytest.raises(ValueError):
        chebyshev_U(-1)


@pytest.mark.parametrize("n", range(21))
def test_explicit_sum_matches_recurrence(n):
    assert chebyshev_T_explicit(n) == chebyshev_T(n)


@pytest.mark.parametrize("n", range(41))
def test_special_values(n):
    assert chebyshev_T(n).evaluate(0) == cheb_constant(n)
    assert chebyshev_U(n).evaluate(0) == cheb_constant(n)
    assert chebyshev_T(n).evaluate(1) == 1
    assert chebyshev_U(n).evaluate(1) == n + 1


@pytest.mark.parametrize(
    ("kind", "build", "value_at_one"),
    [(Kind.FIRST, chebyshev_T, 1), (Kind.SECOND, chebyshev_U, 1101)],
)
def test_high_degree_from_cold_table(monkeypatch, kind, build, value_at_one):
    seeds = [UniPoly.one(), X if kind is Kind.FIRST else X * 2]
    monkeypatch.setitem(families_module._TABLES, kind, seeds)
    poly = build(1100)
    assert poly.degree == 1100
    assert poly.coefficient(1100) == 2 ** (1099 if kind is Kind.FIRST else 1100)
    assert poly.evaluate(1) == value_at_one
    assert len(seeds) == 1101


def test_jacobi_values(half):
    assert jacobi_P(1, -half, -half) == X * half
    assert jacobi_P(2, half, half) == UniPoly([Fraction(-5, 8), 0, Fraction(5, 2)])
    assert jacobi_P(2, -half, -half) == UniPoly([Fraction(-3, 8), 0, Fraction(3, 4)])
    assert jacobi_P(0, 3, 4) == 1


def test_jacobi_parameter_checks():
    with pytest.raises(ValueError):
        jacobi_P(2, -1, 0)
    with pytest.raises(ValueError):
        jacobi_P(-1, 0, 0)
    with pytest.raises(DegenerateRecurrenceError):
        _jacobi(2, Fraction(-1), Fraction(-1))


@pytest.mark.parametrize("n", range(17))
def test_chebyshev_as_jacobi(n):
    assert chebyshev_derivative_jacobi(Kind.FIRST, n, 0) == chebyshev_T(n)
    assert chebyshev_derivative_jacobi(Kind.SECOND, n, 0) == chebyshev_U(n)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(11))
def test_derivatives_as_jacobi(kind, n):
    derivative = chebyshev_T(n) if kind is Kind.FIRST else chebyshev_U(n)
    for k in range(n + 2):
        assert chebyshev_derivative_jacobi(kind, n, k) == derivative
        derivative = derivative.derivative()


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("order", [2, 5, 20])
def test_generating_functions(kind, order):
    assert verify_genfun(kind, order)


def test_generating_function_order_floor():
    with pytest.raises(ValueError):
        verify_genfun(Kind.FIRST, 1)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(21))
def test_derivative_expansions(kind, n):
    assert verify_derivative_expansion(kind, n)


def test_second_kind_has_two_expansions():
    forms = derivative_expansion(Kind.SECOND, 3)
    assert len(forms) == 2
    assert forms[0] == forms[1] == UniPoly([-4, 0, 24])
    assert derivative_expansion(Kind.FIRST, 2) == [X * 4]


class TestTruncatedSeries:
    def test_truncation_and_padding(self):
        series = TruncatedSeries(2, [UniPoly.one(), X, X * X, X * X * X])
        assert len(series.coeffs) == 3
        assert TruncatedSeries(3).coeffs == (UniPoly(),) * 4

    def test_product_drops_high_powers(self):
        one_plus_t = TruncatedSeries(1, [UniPoly.one(), UniPoly.one()])
        assert one_plus_t * one_plus_t == TruncatedSeries(1, [UniPoly.one(), UniPoly.constant(2)])

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            TruncatedSeries(1) + TruncatedSeries(2)
        with pytest.raises(ValueError):
            TruncatedSeries(-1)


class TestAgainstSympy:
    """Cross-check the recurrences with an independent CAS."""

    @staticmethod
    def _coeffs(poly):
        return UniPoly([Fraction(str(c)) for c in reversed(poly.all_coeffs())])

    @pytest.mark.parametrize("n", range(1, 13))
    def test_chebyshev(self, n):
        sympy = pytest.importorskip("sympy")
        x = sympy.Symbol("x")
        assert chebyshev_T(n) == self._coeffs(sympy.chebyshevt_poly(n, x, polys=True))
        assert chebyshev_U(n) == self._coeffs(sympy.chebyshevu_poly(n, x, polys=True))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_jacobi(self, n, half):
        sympy = pytest.importorskip("sympy")
        x = sympy.Symbol("x")
        for a in (-half, half, 3 * half):
            expected = sympy.jacobi_poly(
                n, sympy.Rational(a.numerator, a.denominator),
                sympy.Rational(a.numerator, a.denominator), x, polys=True,
            )
            assert jacobi_P(n, a, a) == self._coeffs(expected)
