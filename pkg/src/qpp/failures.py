from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from qpp.reports import VerificationReport


class QppError(Exception):
    """Base class for every domain error raised by qpp."""


def classify_error(exc: BaseException) -> tuple[str, str]:
    from qpp.summation import DivergenceGuardError

    if isinstance(exc, DivergenceGuardError):
        return (
            "divergence",
            "A sum did not reach the truncation order; check the term valuations.",
        )
    if isinstance(exc, (QppError, ValueError)):
        return ("invalid_input", "Check the identity tag, parameters and truncation order.")
    return ("internal", "Unexpected failure; rerun with --verbose and inspect the log.")


def mismatch_hint(tag: str) -> str:
    from qpp.canonical import CANONICAL_TEXTS

    if tag in CANONICAL_TEXTS:
        return (
            f"Sides disagree; print each side with `qpp canonical --id {tag} --side lhs` "
            "(or `--side rhs`) and expand it with `qpp eval --expr`."
        )
    return f"Sides disagree; rerun `qpp --verbose verify --id {tag}` and inspect the instance."


def failure_from_reports(reports: list[VerificationReport]) -> dict[str, Any] | None:
    """Summarise the first mismatching report.

    Returns `None` when every report verified.
    """

    for report in reports:
        if report.ok:
            continue
        mismatch = report.first_mismatch
        return {
            "classification": "identity_mismatch",
            "id": report.id,
            "instance": report.instance,
            "order": report.order,
            "exponent": mismatch.exponent if mismatch else None,
            "hint": mismatch_hint(report.id),
        }
    return None


def error_payload(exc: BaseException) -> dict[str, Any]:
    classification, hint = classify_error(exc)
    return {
        "classification": classification,
        "type": type(exc).__name__,
        "message": str(exc),
        "hint": hint,
    }
