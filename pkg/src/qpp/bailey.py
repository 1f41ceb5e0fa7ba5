"""The q-series transformation used for the finite-product sums, the Bailey pair
relative to a = q, the limiting Bailey lemma and the partial fraction step behind the
bilateral form of the beta-side sum."""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Callable

from qpp.failures import QppError
from qpp.products import MonomialArg, apply_poch
from qpp.reports import VerificationReport, combine_reports, compare_series
from qpp.series import (
    QSeries,
    div_binomial,
    lift,
    monomial,
    mul_binomial,
    one,
    scale,
    shift,
    sub,
    zero,
)
from qpp.summation import bilateral_series, power_term, sum_series

logger = logging.getLogger(__name__)

ONE = MonomialArg(1, 1)
Q_SQUARED = MonomialArg(1, 2)
MINUS_Q = MonomialArg(-1, 1)

PairTerm = Callable[[int, int], QSeries]


class InvalidSpecializationError(QppError, ValueError):
    pass


def _triangular_cube(n: int) -> int:
    return 3 * n * (n + 1) // 2


def transformation_lhs(x: MonomialArg, y: MonomialArg, m: int, order: int) -> QSeries:
    """sum_{n >= 0} (x; q^m)_n q^(mn) / (y; q^m)_n."""

    def build(n: int) -> QSeries:
        s = apply_poch(monomial(1, m * n, order), x, m, n)
        return apply_poch(s, y, m, n, inverse=True)

    return sum_series(lambda n: power_term(m * n, order, lambda: build(n)), order)


def transformation_rhs(x: MonomialArg, y: MonomialArg, m: int, order: int) -> QSeries:
    """q^m (x;q^m)_inf / (y (y;q^m)_inf (1 - x q^m / y)) + (1 - q^m / y) / (1 - x q^m / y).

    With y = +-q^r the quotients are monomials: q^m / y = sign(y) q^(m - r).
    """

    if m < 1:
        raise InvalidSpecializationError(f"Base power must be positive, got {m}.")
    if y.sign == 1 and y.exponent == 0:
        raise InvalidSpecializationError("y = 1 makes (y; q^m)_n vanish.")
    lead = m - y.exponent
    if lead < 0:
        raise InvalidSpecializationError(f"q^{m}/y = {y.sign}q^{lead} is not a power series.")
    ratio_sign = x.sign * y.sign
    ratio_exponent = x.exponent + lead
    if ratio_exponent == 0 and ratio_sign == 1:
        raise InvalidSpecializationError("1 - x q^m / y has zero constant term.")

    first = monomial(y.sign, lead, order)
    first = apply_poch(first, x, m)
    first = apply_poch(first, y, m, inverse=True)
    first = div_binomial(first, -ratio_sign, ratio_exponent)

    second = mul_binomial(one(order), -y.sign, lead)
    second = div_binomial(second, -ratio_sign, ratio_exponent)
    return first + second


def eq21_check(x: MonomialArg, y: MonomialArg, m: int, order: int) -> VerificationReport:
    started = time.monotonic()
    rhs = transformation_rhs(x, y, m, order)
    lhs = transformation_lhs(x, y, m, order)
    return compare_series(f"eq21[x={x},y={y},m={m}]", lhs, rhs, order, started=started)


def proof_rewrite_check(order: int) -> list[VerificationReport]:
    """The two specialisations that turn finite-product sums into product formulas.

    F^od_ed = (-q;q^2)_inf / 2 * (-1 + sum (-1;q^2)_n q^2n / (-q;q^2)_n)
    F^ed_od = (-q^2;q^2)_inf * sum (-q;q^2)_n q^(2n+1) / (-q^2;q^2)_n
    """

    from qpp.families import family_series
    from qpp.partitions import ParityClass

    reports = []

    started = time.monotonic()
    inner = transformation_lhs(MonomialArg(-1, 0), MonomialArg(-1, 1), 2, order)
    rewritten = scale(apply_poch(inner - 1, MonomialArg(-1, 1), 2), Fraction(1, 2))
    reports.append(
        compare_series(
            "eq21.proof.od_ed",
            family_series(ParityClass.OD_ED, order),
            rewritten,
            order,
            started=started,
        )
    )

    started = time.monotonic()
    inner = transformation_lhs(MonomialArg(-1, 1), MonomialArg(-1, 2), 2, order)
    rewritten = apply_poch(shift(inner, 1), MonomialArg(-1, 2), 2)
    reports.append(
        compare_series(
            "eq21.proof.ed_od",
            family_series(ParityClass.ED_OD, order),
            rewritten,
            order,
            started=started,
        )
    )
    return reports


def bailey_beta(n: int, order: int) -> QSeries:
    """1 / ((-q;q)_n^2 (1 + q^(n+1)))."""

    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}.")
    s = apply_poch(one(order), MINUS_Q, 1, n, inverse=True)
    s = apply_poch(s, MINUS_Q, 1, n, inverse=True)
    return div_binomial(s, 1, n + 1)


def bailey_alpha(n: int, order: int) -> QSeries:
    """2 (-1)^n q^(n(n+1)/2) (1 - q^(2n+1)) / ((1 - q)(1 + q^n)(1 + q^(n+1)))."""

    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}.")
    s = monomial(-2 if n % 2 else 2, n * (n + 1) // 2, order)
    s = mul_binomial(s, -1, 2 * n + 1)
    s = div_binomial(s, -1, 1)
    s = div_binomial(s, 1, n)
    return div_binomial(s, 1, n + 1)


def bailey_pair_sum(alpha: PairTerm, n: int, order: int) -> QSeries:
    """sum_{j=0}^{n} alpha_j / ((q;q)_(n-j) (q^2;q)_(n+j))."""

    total = zero(order)
    for j in range(n + 1):
        s = apply_poch(alpha(j, order), ONE, 1, n - j, inverse=True)
        total = total + apply_poch(s, Q_SQUARED, 1, n + j, inverse=True)
    return total


def bailey_def_reports(
    n_max: int,
    order: int,
    *,
    alpha: PairTerm = bailey_alpha,
    beta: PairTerm = bailey_beta,
) -> list[VerificationReport]:
    reports = []
    for n in range(n_max + 1):
        started = time.monotonic()
        report = compare_series(
            f"bailey.def[n={n}]",
            beta(n, order),
            bailey_pair_sum(alpha, n, order),
            order,
            started=started,
        )
        if not report.ok:
            logger.debug("bailey pair relation fails at n=%d", n)
        reports.append(report)
    return reports


def bailey_def_check(
    n_max: int,
    order: int,
    *,
    alpha: PairTerm = bailey_alpha,
    beta: PairTerm = bailey_beta,
) -> VerificationReport:
    reports = bailey_def_reports(n_max, order, alpha=alpha, beta=beta)
    return combine_reports("bailey.def", order, reports)


def weighted_pair_sum(term: PairTerm, order: int) -> QSeries:
    """sum_{n >= 0} q^(n^2 + n) term_n."""

    def build(n: int) -> QSeries:
        e = n * n + n
        return lift(term(n, order - e), e)

    return sum_series(lambda n: power_term(n * n + n, order, lambda: build(n)), order)


def beta_side_sum(order: int) -> QSeries:
    """sum_{n >= 0} q^(n^2+n) / ((-q;q)_n^2 (1 + q^(n+1)))."""

    return weighted_pair_sum(bailey_beta, order)


def bailey_lemma_rhs(order: int) -> QSeries:
    return apply_poch(weighted_pair_sum(bailey_alpha, order), Q_SQUARED, 1, inverse=True)


def appell_sum(order: int) -> QSeries:
    """sum over all integers n of (-1)^n q^(3n(n+1)/2) / (1 + q^n)."""

    return bilateral_series(_triangular_cube, order)


def bailey_lemma_check(order: int) -> VerificationReport:
    """Limiting Bailey lemma for the pair above, plus the recombination of its alpha side.

    The alpha side sum q^(n^2+n) alpha_n equals 2/(1-q) times the bilateral sum of
    (-1)^n q^(3n(n+1)/2) / (1 + q^n).
    """

    started = time.monotonic()
    alpha_side = weighted_pair_sum(bailey_alpha, order)
    lemma_rhs = apply_poch(alpha_side, Q_SQUARED, 1, inverse=True)
    lemma = compare_series("bailey.lemma", beta_side_sum(order), lemma_rhs, order, started=started)

    started = time.monotonic()
    recombined = div_binomial(scale(appell_sum(order), 2), -1, 1)
    recomb = compare_series(
        "bailey.lemma.recomb", alpha_side, recombined, order, started=started
    )
    return combine_reports("bailey.lemma", order, [lemma, recomb])


def partial_fraction_lhs(n: int, order: int) -> QSeries:
    """(1 - q^(2n+1)) / ((1 + q^n)(1 + q^(n+1)))."""

    s = mul_binomial(one(order), -1, 2 * n + 1)
    s = div_binomial(s, 1, n)
    return div_binomial(s, 1, n + 1)


def partial_fraction_rhs(n: int, order: int) -> QSeries:
    """1/(1 + q^n) - q^(n+1)/(1 + q^(n+1))."""

    return sub(
        div_binomial(one(order), 1, n),
        div_binomial(monomial(1, n + 1, order), 1, n + 1),
    )


def pf_decomp_check(n_max: int, order: int) -> VerificationReport:
    reports = []
    for n in range(n_max + 1):
        started = time.monotonic()
        reports.append(
            compare_series(
                f"pf.decomp[n={n}]",
                partial_fraction_lhs(n, order),
                partial_fraction_rhs(n, order),
                order,
                started=started,
            )
        )
    return combine_reports("pf.decomp", order, reports)


def _alternating_cube_sum(piece: PairTerm, order: int) -> QSeries:
    def build(n: int) -> QSeries:
        e = _triangular_cube(n)
        s = lift(piece(n, order - e), e)
        return -s if n % 2 else s

    return sum_series(lambda n: power_term(_triangular_cube(n), order, lambda: build(n)), order)


def undecomposed_sum(order: int) -> QSeries:
    """sum_{n >= 0} (-1)^n q^(3n(n+1)/2) (1 - q^(2n+1)) / ((1 + q^n)(1 + q^(n+1)))."""

    return _alternating_cube_sum(partial_fraction_lhs, order)


def decomposed_sum(order: int) -> QSeries:
    return _alternating_cube_sum(partial_fraction_rhs, order)
