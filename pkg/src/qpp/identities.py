"""Catalog of univariate identities: both sides of every display, and `verify`."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Callable

from qpp.bailey import appell_sum, beta_side_sum, decomposed_sum, undecomposed_sum
from qpp.failures import QppError
from qpp.families import family_series
from qpp.lattice import double_sum_lhs, double_sum_rhs, theta_diff_lhs, theta_diff_rhs
from qpp.mock_theta import bilateral_a_f, bilateral_b_f, eulerian_f
from qpp.partitions import ParityClass
from qpp.products import MonomialArg, apply_poch, poch_inf
from qpp.reports import VerificationReport, compare_series
from qpp.series import (
    QSeries,
    compose_power,
    div_binomial,
    monomial,
    mul_binomial,
    one,
    scale,
    shift,
)
from qpp.summation import power_term, sum_series

logger = logging.getLogger(__name__)

Builder = Callable[[int], QSeries]


class UnknownTagError(QppError, ValueError):
    pass


class IdentityId(StrEnum):
    AND1_OU_EU = "and1.ou_eu"
    AND2_OD_EU = "and2.od_eu"
    AND3_OU_ED = "and3.ou_ed"
    AND4_EU_OU = "and4.eu_ou"
    AND5_ED_OU = "and5.ed_ou"
    AND6_EU_OD = "and6.eu_od"
    THM1_ODED = "thm1.od_ed"
    THM1_EDOD = "thm1.ed_od"
    THM1_EDOU = "thm1.ed_ou"
    REMARK_F = "remark.f"
    PF_DECOMP = "pf.decomp"
    BILATERAL_RECOMB = "bilateral.recomb"
    S3_DOUBLE_SUM = "s3.double_sum"
    S3_THETA_DIFF = "s3.theta_diff"


def identity_id(tag: IdentityId | str) -> IdentityId:
    try:
        return IdentityId(tag)
    except ValueError as exc:
        raise UnknownTagError(f"Unknown identity tag: {tag!r}") from exc


@dataclass(frozen=True)
class CatalogEntry:
    """Both sides of one identity.

    `alternatives` are further closed forms that must also agree with the left side.
    """

    lhs: Builder
    rhs: Builder
    alternatives: tuple[Builder, ...] = ()


def _m(sign: int, exponent: int) -> MonomialArg:
    return MonomialArg(sign, exponent)


def _at_minus_q(cls: ParityClass) -> Builder:
    return lambda order: compose_power(family_series(cls, order), -1, 1)


def _family(cls: ParityClass) -> Builder:
    return lambda order: family_series(cls, order)


def _and1_rhs(order: int) -> QSeries:
    """1 / ((1 - q)(q^2;q^2)_inf)."""

    return div_binomial(apply_poch(one(order), _m(1, 2), 2, inverse=True), -1, 1)


def _and2_rhs(order: int) -> QSeries:
    """(1/(q^2;q^2)_inf + (-q;q^2)_inf^2) / 2."""

    evens = apply_poch(one(order), _m(1, 2), 2, inverse=True)
    odds = poch_inf(_m(-1, 1), 2, order)
    return scale(evens + odds * odds, Fraction(1, 2))


def _and3_rhs(order: int) -> QSeries:
    """((-q;q)_inf - 1 - sum q^(n(3n-1)/2)(1 - q^n)) / (2 (-q;q^2)_inf)."""

    def term(n: int) -> QSeries | None:
        e = n * (3 * n - 1) // 2
        return power_term(e, order, lambda: mul_binomial(monomial(1, e, order), -1, n))

    inner = poch_inf(_m(-1, 1), 1, order) - 1 - sum_series(term, order)
    return scale(apply_poch(inner, _m(-1, 1), 2, inverse=True), Fraction(1, 2))


def _and4_rhs(order: int) -> QSeries:
    """(1/(q;q^2)_inf - 1/(q^2;q^2)_inf) / (1 - q)."""

    odds = apply_poch(one(order), _m(1, 1), 2, inverse=True)
    evens = apply_poch(one(order), _m(1, 2), 2, inverse=True)
    return div_binomial(odds - evens, -1, 1)


def _and5_rhs(order: int) -> QSeries:
    """-(-q^2;q^2)_inf / 2 * (2 - 1/(-q;q)_inf - sum q^(n^2+n) / ((-q;q)_n^2 (1+q^(n+1))))."""

    inner = 2 - apply_poch(one(order), _m(-1, 1), 1, inverse=True) - beta_side_sum(order)
    return scale(apply_poch(inner, _m(-1, 2), 2), Fraction(-1, 2))


def _and6_rhs(order: int) -> QSeries:
    """-1/(q^2;q^2)_inf times the double sum over j >= 1, n >= j of
    (-1)^(n+j) q^(n(3n+1)/2 - j^2) (1 - q^(2n+1))."""

    def term(k: int, j: int) -> QSeries | None:
        n = j + k
        e = n * (3 * n + 1) // 2 - j * j
        sign = -1 if k % 2 else 1
        return power_term(
            e, order, lambda: mul_binomial(monomial(sign, e, order), -1, 2 * n + 1)
        )

    def row(j: int) -> QSeries:
        return sum_series(lambda k: term(k, j), order)

    inner = sum_series(row, order, start=1)
    return -apply_poch(inner, _m(1, 2), 2, inverse=True)


def _thm1_oded_rhs(order: int) -> QSeries:
    """q (-q;q^2)_inf / (1 - q) * (1 - (-q^2;q^2)_inf / (-q;q^2)_inf)."""

    odds = poch_inf(_m(-1, 1), 2, order)
    evens = poch_inf(_m(-1, 2), 2, order)
    s = odds - evens
    s = div_binomial(s, -1, 1)
    return shift(s, 1)


def _thm1_edod_rhs(order: int) -> QSeries:
    """q (-q^2;q^2)_inf / (1 - q) * (2 - (-q;q^2)_inf / (-q^2;q^2)_inf)."""

    odds = poch_inf(_m(-1, 1), 2, order)
    evens = poch_inf(_m(-1, 2), 2, order)
    s = div_binomial(2 * evens - odds, -1, 1)
    return shift(s, 1)


def _thm1_edou_rhs(order: int) -> QSeries:
    """-(-q^2;q^2)_inf / 2 * (2 - 1/(-q;q)_inf - 2 B / (q;q)_inf), where B is the sum over
    all integers n of (-1)^n q^(3n(n+1)/2) / (1 + q^n)."""

    bilateral = scale(apply_poch(appell_sum(order), _m(1, 1), 1, inverse=True), 2)
    inner = 2 - apply_poch(one(order), _m(-1, 1), 1, inverse=True) - bilateral
    return scale(apply_poch(inner, _m(-1, 2), 2), Fraction(-1, 2))


CATALOG: dict[IdentityId, CatalogEntry] = {
    IdentityId.AND1_OU_EU: CatalogEntry(_family(ParityClass.OU_EU), _and1_rhs),
    IdentityId.AND2_OD_EU: CatalogEntry(_family(ParityClass.OD_EU), _and2_rhs),
    IdentityId.AND3_OU_ED: CatalogEntry(_at_minus_q(ParityClass.OU_ED), _and3_rhs),
    IdentityId.AND4_EU_OU: CatalogEntry(_family(ParityClass.EU_OU), _and4_rhs),
    IdentityId.AND5_ED_OU: CatalogEntry(_at_minus_q(ParityClass.ED_OU), _and5_rhs),
    IdentityId.AND6_EU_OD: CatalogEntry(_at_minus_q(ParityClass.EU_OD), _and6_rhs),
    IdentityId.THM1_ODED: CatalogEntry(_family(ParityClass.OD_ED), _thm1_oded_rhs),
    IdentityId.THM1_EDOD: CatalogEntry(_family(ParityClass.ED_OD), _thm1_edod_rhs),
    IdentityId.THM1_EDOU: CatalogEntry(_at_minus_q(ParityClass.ED_OU), _thm1_edou_rhs),
    IdentityId.REMARK_F: CatalogEntry(eulerian_f, bilateral_a_f, (bilateral_b_f,)),
    IdentityId.PF_DECOMP: CatalogEntry(undecomposed_sum, decomposed_sum),
    IdentityId.BILATERAL_RECOMB: CatalogEntry(decomposed_sum, appell_sum),
    IdentityId.S3_DOUBLE_SUM: CatalogEntry(double_sum_lhs, double_sum_rhs),
    IdentityId.S3_THETA_DIFF: CatalogEntry(theta_diff_lhs, theta_diff_rhs),
}


def lhs_series(id: IdentityId | str, order: int) -> QSeries:
    return CATALOG[identity_id(id)].lhs(order)


def rhs_series(id: IdentityId | str, order: int) -> QSeries:
    return CATALOG[identity_id(id)].rhs(order)


def verify(id: IdentityId | str, order: int) -> VerificationReport:
    """Compare both sides through q^order; alternatives are compared against the left side."""

    key = identity_id(id)
    entry = CATALOG[key]
    started = time.monotonic()
    lhs = entry.lhs(order)
    report = compare_series(key.value, lhs, entry.rhs(order), order, started=started)
    for alternative in entry.alternatives:
        if not report.ok:
            break
        report = compare_series(key.value, lhs, alternative(order), order, started=started)
    logger.debug("verified %s to order %d: %s", key.value, order, report.status.value)
    return report
