from __future__ import annotations

import os
from pathlib import Path

DEFAULT_ORDER = 200
DEFAULT_DOUBLE_SUM_ORDER = 80
DEFAULT_DEGENERATE_ORDER = 60
DEFAULT_BAILEY_ORDER = 150
DEFAULT_SPECIALIZATION_ORDER = 100

DEFAULT_ENUMERATION_BOUND = 60


def _positive_int_from_env(name: str) -> int | None:
    value = os.environ.get(name, "").strip()
    if not value:
        return None
    try:
        parsed = int(value)
    except ValueError:
        return None
    return parsed if parsed >= 1 else None


def default_order(fallback: int = DEFAULT_ORDER) -> int:
    """Truncation order to use when the caller gave none.

    `QPP_DEFAULT_ORDER` overrides every built-in default.
    """

    return _positive_int_from_env("QPP_DEFAULT_ORDER") or fallback


def enumeration_bound() -> int:
    return _positive_int_from_env("QPP_ENUMERATION_BOUND") or DEFAULT_ENUMERATION_BOUND


def runs_dir() -> Path:
    """Where `verify-all --save` writes runs: `QPP_RUNS_DIR`, else `~/.qpp/runs`."""

    value = os.environ.get("QPP_RUNS_DIR", "").strip()
    return Path(value or "~/.qpp/runs").expanduser()
