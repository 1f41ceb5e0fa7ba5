"""On-disk layout of saved `verify-all` runs.

    <runs_dir>/<YYYYmmdd_HHMMSS>_<label>_<run_id>/
        run.json        schema-versioned record, see docs/runs.md
        logs/run.log    one timestamped line per check
"""

from __future__ import annotations

import contextlib
import json
import platform
import re
import sys
import uuid
from dataclasses import dataclass
from datetime import UTC, datetime
from pathlib import Path
from typing import Any, Iterable

from qpp import __version__, config
from qpp.failures import failure_from_reports
from qpp.reports import VerificationReport

SCHEMA_VERSION = 1
RUN_ID_LENGTH = 12

_PRIVATE_MODE = 0o600
_LABEL_JUNK = re.compile(r"[^A-Za-z0-9_-]+")


def _now() -> datetime:
    return datetime.now(UTC).replace(microsecond=0)


def resolve_runs_dir() -> Path:
    return config.runs_dir()


def _label(value: str) -> str:
    return _LABEL_JUNK.sub("_", value.strip()).strip("_")[:40] or "run"


@dataclass(frozen=True)
class RunPaths:
    run_dir: Path
    run_id: str
    created_at: str

    @property
    def run_json(self) -> Path:
        return self.run_dir / "run.json"

    @property
    def logs_dir(self) -> Path:
        return self.run_dir / "logs"

    @property
    def log_file(self) -> Path:
        return self.logs_dir / "run.log"


def create_run_dir(*, runs_dir: Path, label: str) -> RunPaths:
    now = _now()
    run_id = uuid.uuid4().hex[:RUN_ID_LENGTH]
    paths = RunPaths(
        run_dir=runs_dir / f"{now:%Y%m%d_%H%M%S}_{_label(label)}_{run_id}",
        run_id=run_id,
        created_at=now.isoformat(),
    )
    # never reuse an existing run directory
    paths.logs_dir.mkdir(parents=True)
    return paths


def _host() -> dict[str, str]:
    return {
        "hostname": platform.node(),
        "platform": platform.platform(),
        "python": platform.python_version(),
        "executable": sys.executable,
    }


def build_run_record(
    *,
    paths: RunPaths,
    requested: dict[str, Any],
    reports: Iterable[VerificationReport],
) -> dict[str, Any]:
    """Assemble `run.json`; `failure` is present only when some check mismatched."""

    reports = list(reports)
    record: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "run_id": paths.run_id,
        "created_at": paths.created_at,
        "qpp": {"version": __version__},
        "host": _host(),
        "requested": requested,
        "checks": {report.id: report.as_json() for report in reports},
    }
    failure = failure_from_reports(reports)
    if failure is not None:
        record["failure"] = failure
    return record


def _write_private(path: Path, text: str, *, append: bool = False) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a" if append else "w", encoding="utf-8") as handle:
        handle.write(text)
    with contextlib.suppress(OSError):
        path.chmod(_PRIVATE_MODE)


def write_run_json(*, path: Path, run_record: dict[str, Any]) -> None:
    _write_private(path, json.dumps(run_record, indent=2, sort_keys=True) + "\n")


def append_log(*, path: Path, message: str) -> None:
    _write_private(path, f"[{_now().isoformat()}] {message}\n", append=True)


def read_run_json(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def save_run(
    *,
    runs_dir: Path,
    requested: dict[str, Any],
    reports: list[VerificationReport],
    label: str = "verify-all",
) -> RunPaths:
    paths = create_run_dir(runs_dir=runs_dir, label=label)
    for report in reports:
        append_log(path=paths.log_file, message=str(report))
    record = build_run_record(paths=paths, requested=requested, reports=reports)
    write_run_json(path=paths.run_json, run_record=record)
    return paths
