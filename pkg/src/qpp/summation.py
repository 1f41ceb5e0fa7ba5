"""Infinite and bilateral sums of q-series terms with a valuation-based cutoff.

A sum stops once three consecutive terms vanish up to the truncation order. A sum that
keeps producing visible terms for 10 * (order + 10) indices raises `DivergenceGuardError`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from qpp.failures import QppError
from qpp.series import QSeries, add, div_binomial, monomial, valuation, zero

logger = logging.getLogger(__name__)

QUIET_WINDOW = 3

Term = Callable[[int], QSeries | None]


class DivergenceGuardError(QppError, ArithmeticError):
    pass


class NegativeExponentError(QppError, ValueError):
    pass


def guard_limit(order: int) -> int:
    return 10 * (order + 10)


def sum_series(
    term: Term,
    order: int,
    *,
    start: int = 0,
    step: int = 1,
    stop: int | None = None,
) -> QSeries:
    """Sum term(start), term(start + step), ... to `order`.

    `term` returns `None` when it already knows the term vanishes up to `order`. `stop` is
    an inclusive last index; without it the sum is infinite and guarded.
    """

    if step == 0:
        raise ValueError("Summation step must be nonzero.")

    total = zero(order)
    quiet = 0
    visited = 0
    n = start
    limit = guard_limit(order)
    while stop is None or (n <= stop if step > 0 else n >= stop):
        if stop is None and visited >= limit:
            raise DivergenceGuardError(
                f"Sum starting at n={start} still contributes below q^{order + 1} "
                f"after {limit} terms."
            )
        value = term(n)
        visited += 1
        if value is not None and value.order < order:
            raise ValueError(f"Term n={n} is known to order {value.order}, need {order}.")
        if value is None or valuation(value) is None or valuation(value) > order:
            quiet += 1
            if quiet >= QUIET_WINDOW:
                break
        else:
            quiet = 0
            total = add(total, value)
        n += step
    logger.debug("sum from n=%d stopped after %d terms at order %d", start, visited, order)
    return total


def power_term(exponent: int, order: int, build: Callable[[], QSeries]) -> QSeries | None:
    """Skip `build` when a term is divisible by q^exponent beyond the order."""

    if exponent < 0:
        raise NegativeExponentError(f"Term exponent {exponent} is negative.")
    if exponent > order:
        return None
    return build()


@dataclass(frozen=True)
class BilateralTerm:
    """(-1)^n q^exponent / (1 + q^denominator_power), with negative n already rewritten.

    For n < 0 the term (-1)^n q^e / (1 + q^n) equals (-1)^n q^(e + |n|) / (1 + q^|n|).
    The n = 0 term is the constant-denominator case 1/(1 + q^0) = 1/2.
    """

    n: int
    sign: int
    exponent: int
    denominator_power: int

    @classmethod
    def canonical(cls, n: int, exponent: int) -> BilateralTerm:
        sign = -1 if n % 2 else 1
        if n < 0:
            exponent += -n
        if exponent < 0:
            raise NegativeExponentError(
                f"Bilateral term n={n} has exponent {exponent} after rewriting."
            )
        return cls(n=n, sign=sign, exponent=exponent, denominator_power=abs(n))

    @property
    def half_constant(self) -> bool:
        return self.denominator_power == 0

    def series(self, order: int) -> QSeries | None:
        if self.exponent > order:
            return None
        if self.half_constant:
            return monomial(Fraction(self.sign, 2), self.exponent, order)
        return div_binomial(monomial(self.sign, self.exponent, order), 1, self.denominator_power)


def bilateral_series(exponent: Callable[[int], int], order: int) -> QSeries:
    """Sum over all integers n of (-1)^n q^exponent(n) / (1 + q^n)."""

    def term(n: int) -> QSeries | None:
        return BilateralTerm.canonical(n, exponent(n)).series(order)

    upper = sum_series(term, order, start=0)
    lower = sum_series(term, order, start=-1, step=-1)
    return add(upper, lower)
