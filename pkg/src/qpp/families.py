"""Sum sides of the eight parity-separated generating functions.

Each sum side has the shape

    P * sum_{n >= 0} q^(2n + offset) * prod_i (a_i; q^2)_(n + extra_i)^(+-1)

where the infinite product P collects the tail products of the defining series. For
example the OU_EU term q^2n / ((q^2;q^2)_n (q^(2n+1);q^2)_inf) is written with
P = 1/(q;q^2)_inf and finite part (q;q^2)_n / (q^2;q^2)_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from qpp.partitions import ParityClass
from qpp.products import MonomialArg, apply_poch
from qpp.series import QSeries, monomial
from qpp.summation import power_term, sum_series

MODULUS = 2


@dataclass(frozen=True)
class _Factor:
    arg: MonomialArg
    inverse: bool
    extra: int = 0


@dataclass(frozen=True)
class _SumSide:
    prefactor: MonomialArg
    prefactor_inverse: bool
    offset: int
    factors: tuple[_Factor, ...]


def _m(sign: int, exponent: int) -> MonomialArg:
    return MonomialArg(sign, exponent)


_SUM_SIDES: dict[ParityClass, _SumSide] = {
    # q^2n / ((q^2;q^2)_n (q^(2n+1);q^2)_inf)
    ParityClass.OU_EU: _SumSide(
        _m(1, 1), True, 0, (_Factor(_m(1, 1), False), _Factor(_m(1, 2), True))
    ),
    # q^2n (-q^(2n+1);q^2)_inf / (q^2;q^2)_n
    ParityClass.OD_EU: _SumSide(
        _m(-1, 1), False, 0, (_Factor(_m(-1, 1), True), _Factor(_m(1, 2), True))
    ),
    # (-q^2;q^2)_n q^(2n+2) / (q^(2n+3);q^2)_inf
    ParityClass.OU_ED: _SumSide(
        _m(1, 3), True, 2, (_Factor(_m(-1, 2), False), _Factor(_m(1, 3), False))
    ),
    # q^(2n+2) (-q^2;q^2)_n (-q^(2n+3);q^2)_inf
    ParityClass.OD_ED: _SumSide(
        _m(-1, 3), False, 2, (_Factor(_m(-1, 2), False), _Factor(_m(-1, 3), True))
    ),
    # q^(2n+1) / ((q;q^2)_(n+1) (q^(2n+2);q^2)_inf)
    ParityClass.EU_OU: _SumSide(
        _m(1, 2), True, 1, (_Factor(_m(1, 2), False), _Factor(_m(1, 1), True, 1))
    ),
    # q^(2n+1) (-q^(2n+2);q^2)_inf / (q;q^2)_(n+1)
    ParityClass.ED_OU: _SumSide(
        _m(-1, 2), False, 1, (_Factor(_m(-1, 2), True), _Factor(_m(1, 1), True, 1))
    ),
    # q^(2n+1) (-q;q^2)_n / (q^(2n+2);q^2)_inf
    ParityClass.EU_OD: _SumSide(
        _m(1, 2), True, 1, (_Factor(_m(-1, 1), False), _Factor(_m(1, 2), False))
    ),
    # q^(2n+1) (-q;q^2)_n (-q^(2n+2);q^2)_inf
    ParityClass.ED_OD: _SumSide(
        _m(-1, 2), False, 1, (_Factor(_m(-1, 1), False), _Factor(_m(-1, 2), True))
    ),
}


def family_series(cls: ParityClass, order: int) -> QSeries:
    """Generating function of the family `cls`, truncated at `order`."""

    side = _SUM_SIDES[cls]

    def build(n: int) -> QSeries:
        s = monomial(1, 2 * n + side.offset, order)
        for factor in side.factors:
            s = apply_poch(s, factor.arg, MODULUS, n + factor.extra, inverse=factor.inverse)
        return s

    def term(n: int) -> QSeries | None:
        return power_term(2 * n + side.offset, order, lambda: build(n))

    total = sum_series(term, order)
    return apply_poch(total, side.prefactor, MODULUS, inverse=side.prefactor_inverse)
