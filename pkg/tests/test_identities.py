"""Tests for the polynomial identities induced by the Cayley elements."""

from fractions import Fraction

import pytest

from chebyshev_derivations.cayley import cayley_element
from chebyshev_derivations.exactnum import cheb_constant
from chebyshev_derivations.identities import (
    expected_constant,
    substitute_family,
    taylor_shift,
    taylor_shift_constant,
    verify_T_i,
    verify_T_ii,
    verify_T_iii,
    verify_U_i,
    verify_U_ii,
    verify_U_iii,
)
from chebyshev_derivations.models import IdentityId, IdentityReport, Kind
from chebyshev_derivations.multipoly import MultiPoly
from chebyshev_derivations.unipoly import UniPoly

VERIFIERS = {
    IdentityId.T_I: verify_T_i,
    IdentityId.T_II: verify_T_ii,
    IdentityId.T_III: verify_T_iii,
    IdentityId.U_I: verify_U_i,
    IdentityId.U_II: verify_U_ii,
    IdentityId.U_III: verify_U_iii,
}


@pytest.mark.parametrize("identity_id", list(VERIFIERS))
@pytest.mark.parametrize("n", range(1, 17))
def test_identities_hold(identity_id, n):
    report = VERIFIERS[identity_id](n)
    assert report.passed, report.to_text()
    assert report.identity_id is identity_id
    assert report.computed_constant == expected_constant(identity_id, n)
    assert report.residual is None


@pytest.mark.parametrize(
    "identity_id, n, constant",
    [
        (IdentityId.T_I, 2, -1),
        (IdentityId.T_I, 3, 0),
        (IdentityId.T_I, 4, 1),
        (IdentityId.T_II, 2, Fraction(-1, 2)),
        (IdentityId.T_II, 5, 0),
        (IdentityId.T_II, 8, Fraction(1, 8)),
        (IdentityId.T_III, 1, 0),
        (IdentityId.T_III, 2, Fraction(-3, 8)),
        (IdentityId.T_III, 7, 0),
        (IdentityId.U_I, 2, -1),
        (IdentityId.U_I, 3, 0),
        (IdentityId.U_I, 6, -1),
        (IdentityId.U_II, 1, 0),
        (IdentityId.U_II, 2, -1),
        (IdentityId.U_II, 4, 1),
        (IdentityId.U_III, 1, 0),
        (IdentityId.U_III, 2, Fraction(-15, 8)),
        (IdentityId.U_III, 5, 0),
    ],
)
def test_reported_constants(identity_id, n, constant):
    assert VERIFIERS[identity_id](n).computed_constant == constant


@pytest.mark.parametrize("identity_id", list(IdentityId))
@pytest.mark.parametrize("n", range(1, 13, 2))
def test_odd_orders_reduce_to_zero(identity_id, n):
    assert expected_constant(identity_id, n) == 0


@pytest.mark.parametrize("verifier", list(VERIFIERS.values()))
def test_order_zero_rejected(verifier):
    with pytest.raises(ValueError):
        verifier(0)


def test_substitute_family_examples():
    assert substitute_family(MultiPoly.variable(4, 0), Kind.FIRST) == 1
    assert substitute_family(cayley_element(Kind.FIRST, 3).poly, Kind.FIRST) == 0
    assert substitute_family(cayley_element(Kind.SECOND, 4).poly, Kind.SECOND) == 1
    assert substitute_family(MultiPoly.variable(3, 2), Kind.SECOND) == UniPoly([-1, 0, 4])


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(1, 17))
def test_cayley_elements_substitute_to_constants(kind, n):
    value = substitute_family(cayley_element(kind, n).poly, kind)
    assert value.constant_value() == cheb_constant(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_first_identities_agree_with_substituted_elements(n):
    substituted = substitute_family(cayley_element(Kind.FIRST, n).poly, Kind.FIRST)
    assert verify_T_i(n).computed_constant == substituted.constant_value()
    substituted = substitute_family(cayley_element(Kind.SECOND, n).poly, Kind.SECOND)
    assert verify_U_i(n).computed_constant == substituted.constant_value()


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", range(13))
def test_taylor_shift_lands_on_the_value_at_zero(kind, n):
    assert taylor_shift_constant(kind, n) == cheb_constant(n)
    assert taylor_shift(kind, n) == UniPoly.constant(cheb_constant(n))


def test_taylor_shift_rejects_negative_order():
    with pytest.raises(ValueError):
        taylor_shift(Kind.FIRST, -1)


class TestFailedReport:
    def test_non_constant_residual(self):
        report = IdentityReport.from_residual(
            IdentityId.T_I, 2, UniPoly([0, 1]), Fraction(-1)
        )
        assert not report.passed
        assert report.to_text() == "T_i n=2 computed=non-constant expected=-1 FAIL"
        dumped = report.to_json()
        assert dumped["pass"] is False
        assert dumped["computed_constant"] == "non-constant"
        assert dumped["residual"] == {"coeffs": ["0", "1"]}

    def test_wrong_constant(self):
        report = IdentityReport.from_residual(
            IdentityId.U_III, 2, UniPoly([5]), Fraction(-15, 8)
        )
        assert not report.passed
        assert report.computed_constant == 5
        assert report.to_json()["expected_constant"] == "-15/8"

    def test_passing_report_drops_residual(self):
        report = IdentityReport.from_residual(
            IdentityId.T_II, 2, UniPoly([Fraction(-1, 2)]), Fraction(-1, 2)
        )
        assert report.passed
        assert report.to_json() == {
            "identity_id": "T_ii",
            "n": 2,
            "computed_constant": "-1/2",
            "expected_constant": "-1/2",
            "pass": True,
            "residual": None,
            "error": None,
        }
