"""Tests for the terminating 4F3 series and their identities."""

from fractions import Fraction

import pytest

from chebyshev_derivations.exceptions import HypergeometricPoleError, NonTerminatingSeriesError
from chebyshev_derivations.hypergeom import (
    TermRatioSeries,
    build_series,
    build_series_T,
    build_series_U,
    expand_series,
    hypergeom_parameters,
    pfq_terminating,
    series_at,
    verify_hypergeom_T,
    verify_hypergeom_U,
)
from chebyshev_derivations.identities import (
    expected_constant,
    first_kind_inner_sum,
    second_kind_inner_sum,
    verify_T_ii,
)
from chebyshev_derivations.models import IdentityId, Kind
from chebyshev_derivations.unipoly import UniPoly


@pytest.mark.parametrize("n", range(1, 13))
def test_series_match_the_inner_sums(n):
    for k in range(n + 1):
        assert expand_series(build_series_T(n, k)) == first_kind_inner_sum(n, k), (n, k)
        assert expand_series(build_series_U(n, k)) == second_kind_inner_sum(n, k), (n, k)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(1, 21))
def test_ratio_denominators_never_vanish(kind, n):
    for k in range(n + 1):
        series = build_series(kind, n, k)
        assert series.num_terms == len(series.ratios) + 1
        assert series.num_terms == (n - k) // 2 + 1


@pytest.mark.parametrize("n, k, terms", [(4, 2, 2), (5, 0, 3), (3, 3, 1), (6, 1, 3)])
def test_number_of_terms(n, k, terms):
    assert build_series(Kind.FIRST, n, k).num_terms == terms
    assert len(build_series(Kind.SECOND, n, k).ratios) == terms - 1


def test_first_terms():
    assert build_series_T(4, 2).first_term == UniPoly.monomial(Fraction(6 * 4, 4), 2)
    assert build_series_U(3, 1).first_term == UniPoly.monomial(12, 2)


def test_series_shape_is_checked():
    with pytest.raises(ValueError):
        TermRatioSeries(Kind.FIRST, 4, 0, UniPoly.one(), 3, (Fraction(1),))
    with pytest.raises(ValueError):
        build_series_T(2, 3)


@pytest.mark.parametrize("n", range(1, 13))
def test_hypergeometric_identities_hold(n):
    first, second = verify_hypergeom_T(n), verify_hypergeom_U(n)
    assert first.passed and second.passed
    assert first.computed_constant == expected_constant(IdentityId.HG_T, n)
    assert second.computed_constant == expected_constant(IdentityId.HG_U, n)


@pytest.mark.parametrize("n", range(1, 11))
def test_first_kind_series_scale_the_reindexed_identity(n):
    assert verify_hypergeom_T(n).computed_constant == n * verify_T_ii(n).computed_constant


def test_parameters():
    upper, lower = hypergeom_parameters(Kind.FIRST, 4, 2)
    assert upper == [-1, 0, Fraction(-1, 2), Fraction(-1, 2)]
    assert lower == [-3, 3, -1]
    upper, lower = hypergeom_parameters(Kind.SECOND, 4, 2)
    assert upper == [-1, 0, Fraction(-1, 2), Fraction(-1, 2)]
    assert lower == [-4, 4, -1]


class TestPfq:
    def test_zero_parameter_gives_one(self):
        assert pfq_terminating([0, 5], [1], 7) == 1

    def test_short_sum(self):
        assert pfq_terminating([-1, 1], [1], 3) == -2

    def test_explicit_term_count(self):
        assert pfq_terminating([1], [1], 1, terms=3) == Fraction(5, 2)
        assert pfq_terminating([-1, 1], [1], 3, terms=5) == -2

    def test_non_terminating(self):
        with pytest.raises(NonTerminatingSeriesError):
            pfq_terminating([Fraction(1, 2)], [1], 1)
        with pytest.raises(ValueError):
            pfq_terminating([1], [1], 1, terms=0)

    def test_pole(self):
        with pytest.raises(HypergeometricPoleError):
            pfq_terminating([-2], [-1], 1)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("x", [Fraction(1), Fraction(3), Fraction(-1, 2)])
def test_series_at_points(kind, n, x):
    for k in range(n + 1):
        assert series_at(kind, n, k, x) == expand_series(build_series(kind, n, k)).evaluate(x)


def test_series_at_zero_rejected():
    with pytest.raises(ValueError):
        series_at(Kind.FIRST, 3, 1, 0)
