from __future__ import annotations

import os
import re
from pathlib import Path

import pytest

from qpp import __version__
from qpp.reports import Mismatch, Status, VerificationReport
from qpp.run_store import (
    SCHEMA_VERSION,
    RunPaths,
    append_log,
    build_run_record,
    create_run_dir,
    read_run_json,
    resolve_runs_dir,
    save_run,
    write_run_json,
)

pytestmark = pytest.mark.unit

VERIFIED = VerificationReport("eq21", 30, Status.VERIFIED, None, 4)
MISMATCHED = VerificationReport("thm1.od_ed", 30, Status.MISMATCH, Mismatch(5, 3, 4), 9)


def _paths(tmp_path: Path) -> RunPaths:
    return RunPaths(
        run_dir=tmp_path / "20260101_000000_verify-all_abc123def456",
        run_id="abc123def456",
        created_at="2026-01-01T00:00:00+00:00",
    )


def test_resolve_runs_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QPP_RUNS_DIR", str(tmp_path / "custom"))
    assert resolve_runs_dir() == tmp_path / "custom"
    monkeypatch.setenv("QPP_RUNS_DIR", "  ")
    monkeypatch.setenv("HOME", str(tmp_path))
    assert resolve_runs_dir() == tmp_path / ".qpp" / "runs"


def test_create_run_dir_layout(tmp_path: Path) -> None:
    paths = create_run_dir(runs_dir=tmp_path / "runs", label="verify all")
    assert re.fullmatch(r"\d{8}_\d{6}_verify_all_[0-9a-f]{12}", paths.run_dir.name)
    assert paths.run_dir.name.endswith(paths.run_id)
    assert paths.logs_dir.is_dir()
    assert paths.log_file == paths.logs_dir / "run.log"
    assert paths.run_json == paths.run_dir / "run.json"


def test_odd_labels_are_cleaned_up(tmp_path: Path) -> None:
    dotted = create_run_dir(runs_dir=tmp_path, label="s3.double sum")
    assert "_s3_double_sum_" in dotted.run_dir.name
    blank = create_run_dir(runs_dir=tmp_path, label=" ?? ")
    assert "_run_" in blank.run_dir.name


def test_run_record_round_trip(tmp_path: Path) -> None:
    paths = _paths(tmp_path)
    record = build_run_record(
        paths=paths,
        requested={"order": 30, "jobs": 2, "tags": ["eq21"]},
        reports=[VERIFIED],
    )
    assert record["schema_version"] == SCHEMA_VERSION
    assert record["run_id"] == "abc123def456"
    assert record["qpp"] == {"version": __version__}
    assert set(record["host"]) == {"hostname", "platform", "python", "executable"}
    assert record["checks"] == {"eq21": VERIFIED.as_json()}
    assert "failure" not in record

    write_run_json(path=paths.run_json, run_record=record)
    assert read_run_json(paths.run_json) == record
    if os.name == "posix":
        assert (paths.run_json.stat().st_mode & 0o777) == 0o600


def test_failure_names_the_first_mismatch(tmp_path: Path) -> None:
    record = build_run_record(paths=_paths(tmp_path), requested={}, reports=[VERIFIED, MISMATCHED])
    assert record["failure"]["classification"] == "identity_mismatch"
    assert record["failure"]["id"] == "thm1.od_ed"
    assert record["failure"]["exponent"] == 5


def test_append_log_timestamps_lines(tmp_path: Path) -> None:
    log_file = tmp_path / "logs" / "run.log"
    append_log(path=log_file, message="eq21: verified")
    append_log(path=log_file, message="remark.f: verified")
    lines = log_file.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    assert re.fullmatch(r"\[\d{4}-\d\d-\d\dT\d\d:\d\d:\d\d\+00:00\] eq21: verified", lines[0])
    if os.name == "posix":
        assert (log_file.stat().st_mode & 0o777) == 0o600


def test_save_run_writes_record_and_log(tmp_path: Path) -> None:
    paths = save_run(
        runs_dir=tmp_path / "runs",
        requested={"order": 30, "jobs": 1, "tags": ["eq21", "thm1.od_ed"]},
        reports=[VERIFIED, MISMATCHED],
    )
    record = read_run_json(paths.run_json)
    assert sorted(record["checks"]) == ["eq21", "thm1.od_ed"]
    assert record["failure"]["id"] == "thm1.od_ed"
    log = paths.log_file.read_text(encoding="utf-8")
    assert "eq21: verified (order 30, 4 ms)" in log
    assert "thm1.od_ed: mismatch (order 30, 9 ms); first mismatch at q^5: lhs=3 rhs=4" in log
