"""Three representations of the third order mock theta function f(q)."""

from __future__ import annotations

from enum import StrEnum

from qpp.bailey import appell_sum
from qpp.products import MonomialArg, apply_poch
from qpp.series import QSeries, monomial, scale
from qpp.summation import bilateral_series, power_term, sum_series

EULER = MonomialArg(1, 1)
MINUS_Q = MonomialArg(-1, 1)


class RemarkVariant(StrEnum):
    EULERIAN = "eulerian"
    BILATERAL_A = "bilateral_a"
    BILATERAL_B = "bilateral_b"


def eulerian_f(order: int) -> QSeries:
    """sum_{n >= 0} q^(n^2) / (-q;q)_n^2."""

    def build(n: int) -> QSeries:
        s = apply_poch(monomial(1, n * n, order), MINUS_Q, 1, n, inverse=True)
        return apply_poch(s, MINUS_Q, 1, n, inverse=True)

    return sum_series(lambda n: power_term(n * n, order, lambda: build(n)), order)


def bilateral_a_f(order: int) -> QSeries:
    """(2 / (q;q)_inf) sum over Z of (-1)^n q^(n(3n+1)/2) / (1 + q^n)."""

    s = bilateral_series(lambda n: n * (3 * n + 1) // 2, order)
    return scale(apply_poch(s, EULER, 1, inverse=True), 2)


def bilateral_b_f(order: int) -> QSeries:
    """2 - (2 / (q;q)_inf) sum over Z of (-1)^n q^(3n(n+1)/2) / (1 + q^n)."""

    s = scale(apply_poch(appell_sum(order), EULER, 1, inverse=True), 2)
    return 2 - s


_VARIANTS = {
    RemarkVariant.EULERIAN: eulerian_f,
    RemarkVariant.BILATERAL_A: bilateral_a_f,
    RemarkVariant.BILATERAL_B: bilateral_b_f,
}


def remark_f_series(variant: RemarkVariant | str, order: int) -> QSeries:
    return _VARIANTS[RemarkVariant(variant)](order)
