"""Double sums over quadrants of Z^2 for the indefinite and degenerate quadratic forms."""

from __future__ import annotations

import time
from typing import Callable

from qpp.bailey import InvalidSpecializationError
from qpp.partitions import ParityClass
from qpp.products import MonomialArg, apply_poch
from qpp.reports import VerificationReport, combine_reports, compare_series
from qpp.series import (
    QSeries,
    compose_power,
    div_binomial,
    monomial,
    mul_binomial,
    one,
    scale,
    shift,
    zero,
)
from qpp.summation import power_term, sum_series

LatticeTerm = Callable[[int, int], QSeries | None]

DEGENERATE_GRID: tuple[tuple[int, int, int], ...] = tuple(
    (c, 1, c + d) for c in (1, 2, 3) for d in (1, 2)
)


def double_sum(term: LatticeTerm, order: int, *, start: int = 0) -> QSeries:
    """Sum term(n, m) over n, m >= start: m outside, n inside."""

    def row(m: int) -> QSeries:
        return sum_series(lambda n: term(n, m), order, start=start)

    return sum_series(row, order, start=start)


def _indefinite_exponent(n: int, m: int) -> int:
    return n * (n + 3) // 2 + 2 * n * m + 2 * m * m + 2 * m


def double_sum_rhs(order: int) -> QSeries:
    """-q (q;q)_inf (-q^2;q^2)_inf / (q^2;q^2)_inf^2 times
    sum_{n,m >= 0} (-1)^m q^(n(n+3)/2 + 2nm + 2m^2 + 2m) (1 + q^(2m+1))."""

    def build(n: int, m: int) -> QSeries:
        sign = -1 if m % 2 else 1
        return mul_binomial(monomial(sign, _indefinite_exponent(n, m), order), 1, 2 * m + 1)

    def term(n: int, m: int) -> QSeries | None:
        return power_term(_indefinite_exponent(n, m), order, lambda: build(n, m))

    s = double_sum(term, order)
    s = apply_poch(s, MonomialArg(1, 1), 1)
    s = apply_poch(s, MonomialArg(-1, 2), 2)
    s = apply_poch(s, MonomialArg(1, 2), 2, inverse=True)
    s = apply_poch(s, MonomialArg(1, 2), 2, inverse=True)
    return -shift(s, 1)


def double_sum_lhs(order: int) -> QSeries:
    from qpp.families import family_series

    return compose_power(family_series(ParityClass.ED_OD, order), -1, 1)


def _positive_quadrant_exponent(n: int, m: int) -> int:
    return n * (n + 3) // 2 + 2 * n * m + 2 * m * (m + 1)


def _negative_quadrant_exponent(a: int, b: int) -> int:
    """Exponent at (n, m) = (-a, -b)."""

    return a * (a - 3) // 2 + 2 * a * b + 2 * b * (b - 1)


def _signed_monomial(m: int, exponent: int, order: int) -> QSeries | None:
    return power_term(exponent, order, lambda: monomial(-1 if m % 2 else 1, exponent, order))


def theta_diff_lhs(order: int) -> QSeries:
    """(sum over n, m >= 0 minus sum over n, m < 0) of (-1)^m q^(n(n+3)/2 + 2nm + 2m(m+1))."""

    positive = double_sum(
        lambda n, m: _signed_monomial(m, _positive_quadrant_exponent(n, m), order), order
    )
    negative = double_sum(
        lambda a, b: _signed_monomial(b, _negative_quadrant_exponent(a, b), order),
        order,
        start=1,
    )
    return positive - negative


def theta_diff_rhs(order: int) -> QSeries:
    """2 (q^2;q^2)_inf / ((1+q)(q;q^2)_inf) - (q^2;q^2)_inf / ((1+q)(-q^2;q^2)_inf)."""

    evens = apply_poch(one(order), MonomialArg(1, 2), 2)
    first = scale(apply_poch(evens, MonomialArg(1, 1), 2, inverse=True), 2)
    second = apply_poch(evens, MonomialArg(-1, 2), 2, inverse=True)
    return div_binomial(first - second, 1, 1)


def s3_double_sum_check(order: int) -> VerificationReport:
    started = time.monotonic()
    return compare_series(
        "s3.double_sum", double_sum_lhs(order), double_sum_rhs(order), order, started=started
    )


def s3_theta_diff_check(order: int) -> VerificationReport:
    started = time.monotonic()
    return compare_series(
        "s3.theta_diff", theta_diff_lhs(order), theta_diff_rhs(order), order, started=started
    )


def degenerate_lhs(c: int, s: int, t: int, order: int) -> QSeries:
    """sum_{n,m >= 0} z^n w^m q^((n + cm)^2) at z = q^s, w = q^t."""

    def term(n: int, m: int) -> QSeries | None:
        e = s * n + t * m + (n + c * m) ** 2
        return power_term(e, order, lambda: monomial(1, e, order))

    return double_sum(term, order)


def degenerate_rhs(c: int, s: int, t: int, order: int) -> QSeries:
    """1/(1 - w/z^c) sum_{k<c} sum_{n>=0} z^(cn+k) q^((cn+k)^2) (1 - (w/z^c)^(n+1))."""

    gap = t - c * s
    total = zero(order)
    for k in range(c):

        def term(n: int, k: int = k) -> QSeries | None:
            j = c * n + k
            e = s * j + j * j
            return power_term(
                e, order, lambda: mul_binomial(monomial(1, e, order), -1, gap * (n + 1))
            )

        total = total + sum_series(term, order)
    return div_binomial(total, -1, gap)


def s3_degenerate_check(c: int, s: int, t: int, order: int) -> VerificationReport:
    if c < 1 or s < 1 or t < 1:
        raise InvalidSpecializationError(f"c, s and t must be positive, got ({c}, {s}, {t}).")
    if t - c * s < 1:
        raise InvalidSpecializationError(
            f"w/z^c = q^{t - c * s} needs a positive exponent for 1/(1 - w/z^c) to expand."
        )
    started = time.monotonic()
    return compare_series(
        f"s3.degenerate[c={c},s={s},t={t}]",
        degenerate_lhs(c, s, t, order),
        degenerate_rhs(c, s, t, order),
        order,
        started=started,
    )


def s3_degenerate_grid(order: int) -> VerificationReport:
    reports = [s3_degenerate_check(c, s, t, order) for c, s, t in DEGENERATE_GRID]
    return combine_reports("s3.degenerate", order, reports)
