from __future__ import annotations

import pytest

from qpp import config
from qpp.identities import UnknownTagError
from qpp.suite import TAGS, check_tag, default_order_for, run_check, run_checks

pytestmark = pytest.mark.unit

STABLE_TAGS = {
    "and1.ou_eu",
    "and2.od_eu",
    "and3.ou_ed",
    "and4.eu_ou",
    "and5.ed_ou",
    "and6.eu_od",
    "thm1.od_ed",
    "thm1.ed_od",
    "thm1.ed_ou",
    "remark.f",
    "eq21",
    "bailey.def",
    "bailey.lemma",
    "pf.decomp",
    "s3.double_sum",
    "s3.theta_diff",
    "s3.degenerate",
}


def _without_timing(reports) -> list[dict]:
    payloads = [r.as_json() for r in reports]
    for payload in payloads:
        payload.pop("elapsed_ms")
    return payloads


def test_stable_tags_are_registered() -> None:
    assert STABLE_TAGS <= set(TAGS)
    assert "bilateral.recomb" in TAGS


def test_default_orders(monkeypatch: pytest.MonkeyPatch) -> None:
    assert default_order_for("thm1.od_ed") == config.DEFAULT_ORDER
    assert default_order_for("s3.double_sum") == config.DEFAULT_DOUBLE_SUM_ORDER
    assert default_order_for("s3.degenerate") == config.DEFAULT_DEGENERATE_ORDER
    assert default_order_for("bailey.def") == config.DEFAULT_BAILEY_ORDER
    assert default_order_for("eq21") == config.DEFAULT_SPECIALIZATION_ORDER
    monkeypatch.setenv("QPP_DEFAULT_ORDER", "12")
    assert default_order_for("s3.double_sum") == 12


def test_unknown_tag() -> None:
    assert check_tag(" eq21 ") == "eq21"
    with pytest.raises(UnknownTagError):
        check_tag("eq22")
    with pytest.raises(UnknownTagError):
        run_checks(["remark.f", "nope"], 10)


def test_run_check_validates_order() -> None:
    with pytest.raises(ValueError):
        run_check("remark.f", 0)


@pytest.mark.parametrize("tag", sorted(STABLE_TAGS | {"bilateral.recomb"}))
def test_every_check_passes_at_low_order(tag: str) -> None:
    report = run_check(tag, 30)
    assert report.ok, report
    assert report.id == tag
    assert report.order == 30


def test_reports_are_sorted_and_independent_of_jobs() -> None:
    tags = ["thm1.od_ed", "eq21", "remark.f", "bailey.def", "s3.theta_diff"]
    serial = run_checks(tags, 25, jobs=1)
    parallel = run_checks(tags, 25, jobs=3)
    assert [r.id for r in serial] == sorted(tags)
    assert _without_timing(serial) == _without_timing(parallel)


def test_jobs_must_be_positive() -> None:
    with pytest.raises(ValueError):
        run_checks(["remark.f"], 5, jobs=0)


@pytest.mark.slow
def test_full_suite_at_default_orders() -> None:
    assert all(report.ok for report in run_checks(jobs=4))
