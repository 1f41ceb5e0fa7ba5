"""Stable check tags and the runner behind `qpp verify` / `qpp verify-all`."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from qpp import config
from qpp.bailey import (
    bailey_def_check,
    bailey_lemma_check,
    eq21_check,
    pf_decomp_check,
    proof_rewrite_check,
)
from qpp.identities import IdentityId, UnknownTagError, verify
from qpp.lattice import s3_degenerate_grid
from qpp.products import MonomialArg
from qpp.reports import VerificationReport, combine_reports

logger = logging.getLogger(__name__)

BAILEY_DEF_N_MAX = 25
PF_DECOMP_N_MAX = 30

EQ21_INSTANCES: tuple[tuple[MonomialArg, MonomialArg, int], ...] = (
    (MonomialArg(-1, 0), MonomialArg(-1, 1), 2),
    (MonomialArg(-1, 1), MonomialArg(-1, 2), 2),
    (MonomialArg(1, 1), MonomialArg(-1, 0), 1),
    (MonomialArg(-1, 1), MonomialArg(1, 1), 3),
    (MonomialArg(1, 2), MonomialArg(-1, 1), 1),
)


def _eq21(order: int) -> VerificationReport:
    reports = [eq21_check(x, y, m, order) for x, y, m in EQ21_INSTANCES]
    reports.extend(proof_rewrite_check(order))
    return combine_reports("eq21", order, reports)


def _pf_decomp(order: int) -> VerificationReport:
    reports = [pf_decomp_check(PF_DECOMP_N_MAX, order), verify(IdentityId.PF_DECOMP, order)]
    return combine_reports("pf.decomp", order, reports)


def _catalog(id: IdentityId) -> Callable[[int], VerificationReport]:
    return lambda order: verify(id, order)


_CHECKS: dict[str, tuple[Callable[[int], VerificationReport], int]] = {
    IdentityId.AND1_OU_EU.value: (_catalog(IdentityId.AND1_OU_EU), config.DEFAULT_ORDER),
    IdentityId.AND2_OD_EU.value: (_catalog(IdentityId.AND2_OD_EU), config.DEFAULT_ORDER),
    IdentityId.AND3_OU_ED.value: (_catalog(IdentityId.AND3_OU_ED), config.DEFAULT_ORDER),
    IdentityId.AND4_EU_OU.value: (_catalog(IdentityId.AND4_EU_OU), config.DEFAULT_ORDER),
    IdentityId.AND5_ED_OU.value: (_catalog(IdentityId.AND5_ED_OU), config.DEFAULT_ORDER),
    IdentityId.AND6_EU_OD.value: (_catalog(IdentityId.AND6_EU_OD), config.DEFAULT_ORDER),
    IdentityId.THM1_ODED.value: (_catalog(IdentityId.THM1_ODED), config.DEFAULT_ORDER),
    IdentityId.THM1_EDOD.value: (_catalog(IdentityId.THM1_EDOD), config.DEFAULT_ORDER),
    IdentityId.THM1_EDOU.value: (_catalog(IdentityId.THM1_EDOU), config.DEFAULT_ORDER),
    IdentityId.REMARK_F.value: (_catalog(IdentityId.REMARK_F), config.DEFAULT_ORDER),
    "eq21": (_eq21, config.DEFAULT_SPECIALIZATION_ORDER),
    "bailey.def": (
        lambda order: bailey_def_check(BAILEY_DEF_N_MAX, order),
        config.DEFAULT_BAILEY_ORDER,
    ),
    "bailey.lemma": (bailey_lemma_check, config.DEFAULT_BAILEY_ORDER),
    IdentityId.PF_DECOMP.value: (_pf_decomp, config.DEFAULT_SPECIALIZATION_ORDER),
    IdentityId.BILATERAL_RECOMB.value: (
        _catalog(IdentityId.BILATERAL_RECOMB),
        config.DEFAULT_BAILEY_ORDER,
    ),
    IdentityId.S3_DOUBLE_SUM.value: (
        _catalog(IdentityId.S3_DOUBLE_SUM),
        config.DEFAULT_DOUBLE_SUM_ORDER,
    ),
    IdentityId.S3_THETA_DIFF.value: (
        _catalog(IdentityId.S3_THETA_DIFF),
        config.DEFAULT_DOUBLE_SUM_ORDER,
    ),
    "s3.degenerate": (s3_degenerate_grid, config.DEFAULT_DEGENERATE_ORDER),
}

TAGS: tuple[str, ...] = tuple(_CHECKS)


def check_tag(tag: str) -> str:
    normalized = (tag or "").strip()
    if normalized not in _CHECKS:
        raise UnknownTagError(f"Unknown check tag {tag!r}; run `qpp tags` for the list.")
    return normalized


def default_order_for(tag: str) -> int:
    return config.default_order(_CHECKS[check_tag(tag)][1])


def run_check(tag: str, order: int | None = None) -> VerificationReport:
    tag = check_tag(tag)
    resolved = order if order is not None else default_order_for(tag)
    if resolved < 1:
        raise ValueError(f"Truncation order must be at least 1, got {resolved}.")
    check, _ = _CHECKS[tag]
    report = check(resolved)
    logger.debug("%s at order %d: %s in %d ms", tag, resolved, report.status, report.elapsed_ms)
    return report


def run_checks(
    tags: Iterable[str] | None = None,
    order: int | None = None,
    *,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run every requested check; the result is sorted by tag whatever `jobs` is."""

    selected = sorted({check_tag(tag) for tag in (tags if tags is not None else TAGS)})
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}.")
    if jobs == 1 or len(selected) < 2:
        reports = [run_check(tag, order) for tag in selected]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_check, selected, [order] * len(selected)))
    return sorted(reports, key=lambda report: report.id)
