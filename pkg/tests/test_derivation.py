"""Tests for the Chebyshev derivations and the Dixmier map."""

from fractions import Fraction

import pytest
from hypothesis import given

from chebyshev_derivations.derivation import (
    Derivation,
    apply,
    apply_power,
    check_lambda_normalization,
    dixmier_sigma,
    is_in_kernel,
    lambda_scale,
    make_derivation,
    make_derivation_T,
    make_derivation_U,
)
from chebyshev_derivations.exceptions import VariableCountError
from chebyshev_derivations.families import family
from chebyshev_derivations.identities import substitute_family
from chebyshev_derivations.models import Kind, LambdaKind
from chebyshev_derivations.multipoly import MultiPoly

from strategies import multipolys

FIRST_KIND_TABLE = [
    {},
    {0: 1},
    {1: 4},
    {2: 6, 0: 3},
    {3: 8, 1: 8},
    {4: 10, 2: 10, 0: 5},
    {5: 12, 3: 12, 1: 12},
    {6: 14, 4: 14, 2: 14, 0: 7},
    {7: 16, 5: 16, 3: 16, 1: 16},
]

SECOND_KIND_TABLE = [
    {},
    {0: 2},
    {1: 4},
    {2: 6, 0: 2},
    {3: 8, 1: 4},
    {4: 10, 2: 6, 0: 2},
    {5: 12, 3: 8, 1: 4},
    {6: 14, 4: 10, 2: 6, 0: 2},
    {7: 16, 5: 12, 3: 8, 1: 4},
]


def x(nvars, index, power=1):
    return MultiPoly.variable(nvars, index, power)


@pytest.mark.parametrize("m", range(9))
def test_first_kind_images(m):
    assert make_derivation_T(8).image(m) == MultiPoly.linear_form(9, FIRST_KIND_TABLE[m])


@pytest.mark.parametrize("m", range(9))
def test_second_kind_images(m):
    assert make_derivation_U(8).image(m) == MultiPoly.linear_form(9, SECOND_KIND_TABLE[m])


@pytest.mark.parametrize("kind", list(Kind))
def test_derivations_are_weitzenbock(kind):
    derivation = make_derivation(kind, 10)
    assert derivation.kind is kind
    assert derivation.nvars == 11
    assert derivation.is_linear()
    assert derivation.is_triangular()
    assert derivation.is_weitzenbock()


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("m", range(9))
def test_nilpotency_index_of_generators(kind, m):
    derivation = make_derivation(kind, 8)
    assert derivation.nilpotency_index(x(9, m)) == m + 1
    assert apply_power(derivation, x(9, m), m + 1).is_zero()
    assert not apply_power(derivation, x(9, m), m).is_zero()


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("m", range(13))
def test_images_are_derivatives_under_substitution(kind, m):
    image = make_derivation(kind, 12).image(m)
    assert substitute_family(image, kind) == family(kind, m).derivative()


@pytest.mark.parametrize("kind", list(Kind))
@given(f=multipolys(), g=multipolys())
def test_leibniz_rule(kind, f, g):
    derivation = make_derivation(kind, 2)
    assert apply(derivation, f * g) == apply(derivation, f) * g + f * apply(derivation, g)


@pytest.mark.parametrize("kind", list(Kind))
@given(f=multipolys())
def test_derivation_acts_as_d_dx(kind, f):
    derivation = make_derivation(kind, 2)
    assert substitute_family(derivation.apply(f), kind) == substitute_family(f, kind).derivative()


def test_non_triangular_derivation_is_not_nilpotent():
    swap = Derivation((x(2, 1), x(2, 0)))
    assert swap.is_linear()
    assert not swap.is_triangular()
    assert not swap.is_weitzenbock()
    assert swap.nilpotency_index(x(2, 0)) is None
    assert swap.nilpotency_index(MultiPoly.zero(2)) == 0


def test_variable_counts_are_checked():
    with pytest.raises(VariableCountError):
        Derivation((x(3, 0), x(3, 1)))
    with pytest.raises(VariableCountError):
        make_derivation_T(2).apply(x(2, 1))
    with pytest.raises(ValueError):
        make_derivation_T(2).power(x(3, 1), -1)
    with pytest.raises(ValueError):
        make_derivation_U(-1)


def test_quotient_rule_on_the_slice():
    derivation = make_derivation_T(2)
    slice_ = MultiPoly.monomial(3, {1: 1, 0: -1}, lambda_scale(Kind.FIRST))
    assert derivation.apply(slice_) == MultiPoly.constant(3, -1)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(1, 9))
def test_lambda_normalization(kind, n):
    assert check_lambda_normalization(kind, n)


def test_lambda_scales():
    assert lambda_scale(Kind.FIRST) == -1
    assert lambda_scale(Kind.SECOND) == Fraction(-1, 2)


def test_dixmier_examples():
    assert dixmier_sigma(Kind.FIRST, 2).value == MultiPoly(3, {(1, 0, 1): 1, (0, 2, 0): -2})
    assert dixmier_sigma(Kind.SECOND, 2).value == MultiPoly(3, {(1, 0, 1): 1, (0, 2, 0): -1})
    assert dixmier_sigma(Kind.FIRST, 3).value == MultiPoly(
        4,
        {(0, 3, 0, 0): 8, (1, 1, 1, 0): -6, (2, 1, 0, 0): -3, (2, 0, 0, 1): 1},
    )


def test_dixmier_element_metadata():
    element = dixmier_sigma(Kind.SECOND, 4)
    assert element.n == 4
    assert element.kind is Kind.SECOND
    assert element.lambda_kind is LambdaKind.SECOND
    assert element.value.nvars == 5


@pytest.mark.parametrize("kind", list(Kind))
def test_sigma_of_the_slice_generator_vanishes(kind):
    assert dixmier_sigma(kind, 1).value.is_zero()


def test_dixmier_needs_positive_order():
    with pytest.raises(ValueError):
        dixmier_sigma(Kind.FIRST, 0)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(2, 11))
def test_dixmier_images_are_homogeneous_kernel_elements(kind, n):
    value = dixmier_sigma(kind, n).value
    assert not value.has_negative_exponents()
    assert value.is_homogeneous(n)
    assert is_in_kernel(make_derivation(kind, n), value)
