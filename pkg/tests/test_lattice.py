from __future__ import annotations

import pytest

from qpp.bailey import InvalidSpecializationError
from qpp.lattice import (
    DEGENERATE_GRID,
    degenerate_lhs,
    degenerate_rhs,
    double_sum,
    double_sum_lhs,
    double_sum_rhs,
    s3_degenerate_check,
    s3_degenerate_grid,
    s3_double_sum_check,
    s3_theta_diff_check,
    theta_diff_lhs,
)
from qpp.series import monomial
from qpp.summation import power_term

pytestmark = pytest.mark.unit


def test_double_sum_counts_lattice_points() -> None:
    order = 6

    def term(n: int, m: int):
        return power_term(n + m, order, lambda: monomial(1, n + m, order))

    # q^(n+m) over the quadrant is 1/(1-q)^2.
    assert double_sum(term, order).coeffs == (1, 2, 3, 4, 5, 6, 7)
    assert double_sum(term, order, start=1).coeffs == (0, 0, 1, 2, 3, 4, 5)


def test_double_sum_sides_vanish_at_q0() -> None:
    assert double_sum_lhs(10)[0] == 0
    assert double_sum_rhs(10)[0] == 0


def test_double_sum_identity() -> None:
    assert s3_double_sum_check(40).ok


def test_theta_difference_identity() -> None:
    assert theta_diff_lhs(10)[0] == 1
    assert s3_theta_diff_check(40).ok


@pytest.mark.slow
def test_double_sum_identities_to_order_80() -> None:
    assert s3_double_sum_check(80).ok
    assert s3_theta_diff_check(80).ok


def test_degenerate_form_instance() -> None:
    report = s3_degenerate_check(2, 1, 3, 60)
    assert report.ok
    assert report.id == "s3.degenerate[c=2,s=1,t=3]"
    assert degenerate_lhs(2, 1, 3, 10) == degenerate_rhs(2, 1, 3, 10)


@pytest.mark.parametrize(("c", "s", "t"), [(1, 1, 1), (2, 1, 2), (0, 1, 3), (1, 0, 2)])
def test_degenerate_form_rejects_bad_specializations(c: int, s: int, t: int) -> None:
    with pytest.raises(InvalidSpecializationError):
        s3_degenerate_check(c, s, t, 10)


def test_degenerate_grid() -> None:
    assert len(DEGENERATE_GRID) == 6
    report = s3_degenerate_grid(30)
    assert report.ok
    assert report.id == "s3.degenerate"
