from __future__ import annotations

from fractions import Fraction

import pytest

from qpp.bailey import (
    InvalidSpecializationError,
    appell_sum,
    bailey_alpha,
    bailey_beta,
    bailey_def_check,
    bailey_def_reports,
    bailey_lemma_check,
    beta_side_sum,
    decomposed_sum,
    eq21_check,
    partial_fraction_lhs,
    partial_fraction_rhs,
    pf_decomp_check,
    proof_rewrite_check,
    transformation_lhs,
    transformation_rhs,
    undecomposed_sum,
    weighted_pair_sum,
)
from qpp.identities import IdentityId, rhs_series
from qpp.products import MonomialArg, poch_inf
from qpp.reports import Status
from qpp.series import add, div_binomial, monomial, mul, mul_binomial, one, scale

pytestmark = pytest.mark.unit


@pytest.mark.parametrize(
    ("x", "y", "m"),
    [
        ("-1", "-q", 2),
        ("-q", "-q^2", 2),
        ("q", "-1", 1),
        ("-q", "q", 3),
        ("q^2", "-q", 1),
    ],
)
def test_eq21_instances(x: str, y: str, m: int) -> None:
    report = eq21_check(MonomialArg.parse(x), MonomialArg.parse(y), m, 60)
    assert report.ok, report
    assert report.id == f"eq21[x={x},y={y},m={m}]"


def test_eq21_rejects_invalid_specializations() -> None:
    with pytest.raises(InvalidSpecializationError):
        transformation_rhs(MonomialArg(1, 2), MonomialArg(1, 3), 1, 20)
    with pytest.raises(InvalidSpecializationError):
        transformation_rhs(MonomialArg(-1, 0), MonomialArg(1, 0), 2, 20)
    with pytest.raises(InvalidSpecializationError):
        transformation_rhs(MonomialArg(1, 0), MonomialArg(1, 1), 1, 20)


def test_transformation_sides_for_a_terminating_sum() -> None:
    # x = 1 kills every n >= 1 term, so the left side is 1.
    order = 15
    x, y = MonomialArg(1, 0), MonomialArg(-1, 0)
    assert transformation_lhs(x, y, 1, order) == transformation_rhs(x, y, 1, order)
    assert transformation_lhs(x, y, 1, order) == monomial(1, 0, order)


def test_proof_rewrites() -> None:
    reports = proof_rewrite_check(60)
    assert [r.id for r in reports] == ["eq21.proof.od_ed", "eq21.proof.ed_od"]
    assert all(r.ok for r in reports)


def test_bailey_pair_terms() -> None:
    order = 10
    assert bailey_beta(1, order)[0] == 1
    # -2q(1 - q^3) / ((1 - q)(1 + q)(1 + q^2))
    expected = monomial(-2, 1, order)
    expected = mul_binomial(expected, -1, 3)
    for c, e in [(-1, 1), (1, 1), (1, 2)]:
        expected = div_binomial(expected, c, e)
    assert bailey_alpha(1, order) == expected
    assert bailey_alpha(0, order) == bailey_beta(0, order)


def test_bailey_definition_holds() -> None:
    report = bailey_def_check(12, 60)
    assert report.ok
    assert report.id == "bailey.def"


@pytest.mark.slow
def test_bailey_definition_to_order_150() -> None:
    assert bailey_def_check(25, 150).ok


def test_perturbed_alpha_breaks_the_relation_at_n_2() -> None:
    def perturbed(n: int, order: int):
        alpha = bailey_alpha(n, order)
        return add(alpha, monomial(1, 1, order)) if n == 2 else alpha

    reports = bailey_def_reports(5, 40, alpha=perturbed)
    assert [r.ok for r in reports[:2]] == [True, True]
    assert reports[2].status is Status.MISMATCH
    assert reports[2].id == "bailey.def[n=2]"
    combined = bailey_def_check(5, 40, alpha=perturbed)
    assert combined.first_mismatch == reports[2].first_mismatch
    assert combined.instance == "bailey.def[n=2]"


def test_bailey_lemma() -> None:
    assert bailey_lemma_check(60).ok
    assert beta_side_sum(10)[0] == 1


@pytest.mark.parametrize("order", [80, pytest.param(150, marks=pytest.mark.slow)])
def test_beta_side_sum_is_the_bilateral_sum_over_euler(order: int) -> None:
    euler = poch_inf(MonomialArg(1, 1), 1, order)
    assert mul(beta_side_sum(order), euler) == scale(appell_sum(order), 2)


def test_partial_fractions() -> None:
    order = 20
    assert partial_fraction_lhs(0, order)[0] == Fraction(1, 2)
    for n in range(6):
        assert partial_fraction_lhs(n, order) == partial_fraction_rhs(n, order)
    assert pf_decomp_check(30, 100).ok


def test_decomposition_preserves_the_alternating_sum() -> None:
    order = 60
    assert undecomposed_sum(order) == decomposed_sum(order)
    assert decomposed_sum(order) == appell_sum(order)


@pytest.mark.slow
def test_bailey_steps_carry_the_sum_side_to_the_bilateral_form() -> None:
    order = 150
    assert bailey_def_check(25, order).ok
    assert bailey_lemma_check(order).ok
    assert pf_decomp_check(30, 100).ok
    assert rhs_series(IdentityId.AND5_ED_OU, order) == rhs_series(IdentityId.THM1_EDOU, order)


def test_weighted_pair_sum_builds_each_term_only_to_the_order_it_needs() -> None:
    requested: dict[int, int] = {}

    def term(n: int, order: int):
        requested[n] = order
        return one(order)

    s = weighted_pair_sum(term, 12)
    assert s.order == 12
    assert s.coeffs == (1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1)
    assert requested == {0: 12, 1: 10, 2: 6, 3: 0}
