from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from qpp.failures import QppError
from qpp.reports import Status

UNKNOWN_STATUS = "unknown"


class RunNotFoundError(QppError, ValueError):
    pass


class RunAmbiguousError(QppError, ValueError):
    pass


def _text(record: dict[str, Any], key: str) -> str | None:
    value = record.get(key)
    return value if isinstance(value, str) else None


def overall_status(statuses: Iterable[str]) -> str:
    """`mismatch` if any check mismatched, `verified` if all verified, else `unknown`."""

    seen = set(statuses)
    if Status.MISMATCH.value in seen:
        return Status.MISMATCH.value
    if seen == {Status.VERIFIED.value}:
        return Status.VERIFIED.value
    return UNKNOWN_STATUS


@dataclass(frozen=True)
class RunSummary:
    run_dir: Path
    run_id: str | None = None
    created_at: str | None = None
    order: int | None = None
    check_statuses: dict[str, str] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return overall_status(self.check_statuses.values())

    @classmethod
    def from_record(cls, run_dir: Path, record: dict[str, Any] | None) -> RunSummary:
        if record is None:
            return cls(run_dir)
        checks = record.get("checks")
        statuses = {
            tag: report["status"]
            for tag, report in (checks.items() if isinstance(checks, dict) else ())
            if isinstance(report, dict) and isinstance(report.get("status"), str)
        }
        requested = record.get("requested")
        order = requested.get("order") if isinstance(requested, dict) else None
        return cls(
            run_dir=run_dir,
            run_id=_text(record, "run_id"),
            created_at=_text(record, "created_at"),
            order=order if isinstance(order, int) else None,
            check_statuses=statuses,
        )

    def as_json(self) -> dict[str, Any]:
        return {
            "run_id": self.run_id,
            "created_at": self.created_at,
            "run_dir": str(self.run_dir),
            "order": self.order,
            "checks": dict(self.check_statuses),
            "status": self.status,
        }


def list_run_dirs(runs_dir: Path) -> list[Path]:
    """Run directories, newest first (names start with a UTC timestamp)."""

    if not runs_dir.is_dir():
        return []
    return sorted((p for p in runs_dir.iterdir() if p.is_dir()), reverse=True)


def read_run_record(run_dir: Path) -> dict[str, Any] | None:
    try:
        record = json.loads((run_dir / "run.json").read_text(encoding="utf-8"))
    except (OSError, ValueError):
        return None
    return record if isinstance(record, dict) else None


def summarize_run(run_dir: Path) -> RunSummary:
    return RunSummary.from_record(run_dir, read_run_record(run_dir))


def resolve_run_dir(runs_dir: Path, run_ref: str) -> Path:
    """Find the run whose directory name or run id starts with `run_ref`.

    An exact name or id wins over prefix matches.
    """

    ref = (run_ref or "").strip()
    if not ref:
        raise RunNotFoundError("Missing run reference.")

    matches: list[tuple[Path, str | None]] = []
    for run_dir in list_run_dirs(runs_dir):
        run_id = _text(read_run_record(run_dir) or {}, "run_id")
        if run_dir.name.startswith(ref) or (run_id or "").startswith(ref):
            matches.append((run_dir, run_id))

    if not matches:
        raise RunNotFoundError(f"No saved run matches {ref!r}.")
    exact = [run_dir for run_dir, run_id in matches if ref in (run_dir.name, run_id)]
    if len(exact) == 1:
        return exact[0]
    if len(matches) == 1:
        return matches[0][0]
    names = ", ".join(run_dir.name for run_dir, _ in matches[:5])
    raise RunAmbiguousError(f"Run reference {ref!r} is ambiguous (matches: {names}).")
