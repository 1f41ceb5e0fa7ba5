from __future__ import annotations

import time
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from qpp.series import QSeries, Rational, first_mismatch, format_rational, parse_rational


class Status(StrEnum):
    VERIFIED = "verified"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: Rational
    rhs: Rational

    def as_json(self) -> dict[str, Any]:
        return {
            "exponent": self.exponent,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> Mismatch:
        return cls(
            exponent=int(payload["exponent"]),
            lhs=parse_rational(str(payload["lhs"])),
            rhs=parse_rational(str(payload["rhs"])),
        )


@dataclass(frozen=True)
class VerificationReport:
    id: str
    order: int
    status: Status
    first_mismatch: Mismatch | None
    elapsed_ms: int
    # id of the failing instance when several were folded into this report
    instance: str | None = None

    def __post_init__(self) -> None:
        if (self.status is Status.MISMATCH) != (self.first_mismatch is not None):
            raise ValueError("A mismatch report needs its first mismatch, and only then.")

    @property
    def ok(self) -> bool:
        return self.status is Status.VERIFIED

    def __str__(self) -> str:
        line = f"{self.id}: {self.status.value} (order {self.order}, {self.elapsed_ms} ms)"
        mismatch = self.first_mismatch
        if mismatch is not None:
            where = f" in {self.instance}" if self.instance else ""
            line += (
                f"; first mismatch{where} at q^{mismatch.exponent}: "
                f"lhs={format_rational(mismatch.lhs)} rhs={format_rational(mismatch.rhs)}"
            )
        return line

    def as_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "order": self.order,
            "status": self.status.value,
            "first_mismatch": self.first_mismatch.as_json() if self.first_mismatch else None,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> VerificationReport:
        mismatch = payload.get("first_mismatch")
        return cls(
            id=str(payload["id"]),
            order=int(payload["order"]),
            status=Status(payload["status"]),
            first_mismatch=Mismatch.from_json(mismatch) if mismatch else None,
            elapsed_ms=int(payload["elapsed_ms"]),
        )


def elapsed_ms_since(started: float) -> int:
    return int((time.monotonic() - started) * 1000)


def compare_series(
    id: str,
    lhs: QSeries,
    rhs: QSeries,
    order: int,
    *,
    started: float,
) -> VerificationReport:
    """Report on lhs == rhs through q^order; `started` is a `time.monotonic()` reading."""

    exponent = first_mismatch(lhs, rhs, order)
    mismatch = None
    if exponent is not None:
        mismatch = Mismatch(exponent=exponent, lhs=lhs[exponent], rhs=rhs[exponent])
    return VerificationReport(
        id=id,
        order=order,
        status=Status.VERIFIED if mismatch is None else Status.MISMATCH,
        first_mismatch=mismatch,
        elapsed_ms=elapsed_ms_since(started),
    )


def combine_reports(id: str, order: int, reports: list[VerificationReport]) -> VerificationReport:
    """Fold instance reports into one; the first failing instance decides the mismatch."""

    failing = next((report for report in reports if not report.ok), None)
    return VerificationReport(
        id=id,
        order=order,
        status=Status.VERIFIED if failing is None else Status.MISMATCH,
        first_mismatch=failing.first_mismatch if failing else None,
        elapsed_ms=sum(report.elapsed_ms for report in reports),
        instance=(failing.instance or failing.id) if failing else None,
    )
