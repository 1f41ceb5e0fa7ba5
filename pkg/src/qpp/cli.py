from __future__ import annotations

import json
import logging
import sys
from enum import IntEnum, StrEnum
from pathlib import Path
from typing import Any, NoReturn

import typer

from qpp import __version__, config
from qpp.canonical import Side, canonical_text
from qpp.evaluate import evaluate
from qpp.failures import QppError, error_payload, failure_from_reports
from qpp.families import family_series
from qpp.parser import parse
from qpp.partitions import BoundExceededError, oracle_series, parity_class
from qpp.reports import VerificationReport
from qpp.run_store import resolve_runs_dir, save_run
from qpp.runs import (
    RunAmbiguousError,
    RunNotFoundError,
    list_run_dirs,
    read_run_record,
    resolve_run_dir,
    summarize_run,
)
from qpp.series import QSeries, format_rational
from qpp.suite import TAGS, default_order_for, run_check, run_checks

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    MISMATCH = 1
    USAGE_ERROR = 2


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


app = typer.Typer(no_args_is_help=True, add_completion=False)
runs_app = typer.Typer(no_args_is_help=True)

_ORDER_HELP = "Truncation order N; coefficients of q^0 .. q^N are compared."


def _emit(fmt: OutputFormat, *, payload: Any, text: str) -> None:
    if fmt is OutputFormat.JSON:
        typer.echo(json.dumps(payload, sort_keys=True))
        return
    typer.echo(text)


def _fail(exc: BaseException, fmt: OutputFormat = OutputFormat.PLAIN) -> NoReturn:
    payload = error_payload(exc)
    logger.debug("command failed", exc_info=exc)
    if fmt is OutputFormat.JSON:
        typer.echo(json.dumps({"ok": False, "error": payload}, sort_keys=True), err=True)
    else:
        typer.echo(f"error: {payload['message']}", err=True)
        typer.echo(f"hint: {payload['hint']}", err=True)
    raise typer.Exit(code=ExitCode.USAGE_ERROR)


def _series_payload(series: QSeries, **extra: Any) -> dict[str, Any]:
    return {
        **extra,
        "order": series.order,
        "coefficients": [format_rational(c) for c in series],
    }


def _emit_series(fmt: OutputFormat, series: QSeries, **extra: Any) -> None:
    if fmt is OutputFormat.CSV:
        typer.echo("n,coefficient")
        for n, c in enumerate(series):
            typer.echo(f"{n},{format_rational(c)}")
        return
    _emit(
        fmt,
        payload=_series_payload(series, **extra),
        text=", ".join(format_rational(c) for c in series),
    )


def _exit_for(reports: list[VerificationReport]) -> None:
    if not all(report.ok for report in reports):
        raise typer.Exit(code=ExitCode.MISMATCH)


def _runs_dir(runs_dir: str | None) -> Path:
    return Path(runs_dir).expanduser() if runs_dir else resolve_runs_dir()


def _show_version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def _main(
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-v",
        help="Log debug output (term counts, cut-offs, timings) to stderr.",
    ),
    version: bool = typer.Option(
        False,
        "--version",
        help="Show version and exit.",
        is_eager=True,
        callback=_show_version,
    ),
) -> None:
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )


@app.command()
def coeffs(
    family: str = typer.Option(..., "--family", help="Partition family tag, e.g. od_ed."),
    order: int | None = typer.Option(None, "--order", min=1, help=_ORDER_HELP),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Coefficients of a family's generating function from its q-series closed form."""
    try:
        cls = parity_class(family)
        series = family_series(cls, order if order is not None else config.default_order())
    except (QppError, ValueError) as exc:
        _fail(exc, fmt)
    _emit_series(fmt, series, family=cls.tag, source="series")


@app.command()
def oracle(
    family: str = typer.Option(..., "--family", help="Partition family tag, e.g. od_ed."),
    order: int | None = typer.Option(
        None,
        "--order",
        min=1,
        help="Largest n to enumerate (default and limit: $QPP_ENUMERATION_BOUND or 60).",
    ),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Partition counts by brute-force enumeration."""
    bound = config.enumeration_bound()
    resolved = order if order is not None else bound
    try:
        cls = parity_class(family)
        if resolved > bound:
            raise BoundExceededError(
                f"Enumeration is limited to order {bound} (set QPP_ENUMERATION_BOUND)."
            )
        series = oracle_series(cls, resolved)
    except (QppError, ValueError) as exc:
        _fail(exc, fmt)
    _emit_series(fmt, series, family=cls.tag, source="oracle")


@app.command()
def verify(
    tag: str = typer.Option(..., "--id", help="Check tag; see `qpp tags`."),
    order: int | None = typer.Option(None, "--order", min=1, help=_ORDER_HELP),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Verify one identity or check to the given order."""
    try:
        report = run_check(tag, order)
    except (QppError, ValueError) as exc:
        _fail(exc, fmt)
    _emit(fmt, payload=report.as_json(), text=str(report))
    _exit_for([report])


@app.command("verify-all")
def verify_all(
    tags: list[str] | None = typer.Option(
        None,
        "--id",
        help="Restrict to these check tags (repeatable; default: every tag).",
    ),
    order: int | None = typer.Option(
        None,
        "--order",
        min=1,
        help="Truncation order for every check (default: each check's own default).",
    ),
    jobs: int = typer.Option(1, "--jobs", min=1, help="Worker processes."),
    save: bool = typer.Option(False, "--save", help="Persist the run under the runs directory."),
    runs_dir: str | None = typer.Option(
        None,
        "--runs-dir",
        help="Override runs directory (default: $QPP_RUNS_DIR or ~/.qpp/runs).",
    ),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Run every check; reports are sorted by tag whatever --jobs is."""
    try:
        reports = run_checks(tags or None, order, jobs=jobs)
    except (QppError, ValueError) as exc:
        _fail(exc, fmt)
    failure = failure_from_reports(reports)

    if save:
        try:
            paths = save_run(
                runs_dir=_runs_dir(runs_dir),
                requested={"order": order, "jobs": jobs, "tags": [r.id for r in reports]},
                reports=reports,
            )
        except OSError as exc:
            _fail(exc, fmt)
        logger.debug("saved run %s", paths.run_id)
        typer.echo(f"run saved: {paths.run_dir}", err=True)

    verified = sum(1 for report in reports if report.ok)
    _emit(
        fmt,
        payload={"reports": [report.as_json() for report in reports], "failure": failure},
        text="\n".join([*map(str, reports), f"{verified}/{len(reports)} verified"]),
    )
    _exit_for(reports)


@app.command("eval")
def eval_command(
    expr: str = typer.Option(..., "--expr", help="Expression in the q-series language."),
    order: int | None = typer.Option(None, "--order", min=1, help=_ORDER_HELP),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Evaluate an expression to a truncated series."""
    try:
        series = evaluate(parse(expr), order if order is not None else config.default_order())
    except (QppError, ValueError, ArithmeticError) as exc:
        _fail(exc, fmt)
    _emit_series(fmt, series, expr=expr)


@app.command()
def tags(
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """List check tags with their default orders."""
    orders = {tag: default_order_for(tag) for tag in sorted(TAGS)}
    if fmt is OutputFormat.CSV:
        typer.echo("tag,default_order")
        for tag, default in orders.items():
            typer.echo(f"{tag},{default}")
        return
    _emit(
        fmt,
        payload={"tags": [{"tag": t, "default_order": o} for t, o in orders.items()]},
        text="\n".join(f"{tag}  (order {default})" for tag, default in orders.items()),
    )


@app.command()
def canonical(
    tag: str = typer.Option(..., "--id", help="Identity tag, e.g. thm1.od_ed."),
    side: Side = typer.Option(..., "--side", help="Which side of the identity."),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
) -> None:
    """Print one side of an identity as an `eval` expression."""
    try:
        expr = canonical_text(tag, side)
    except (QppError, ValueError) as exc:
        _fail(exc, fmt)
    if fmt is OutputFormat.CSV:
        typer.echo("id,side,expr")
        typer.echo(f'{tag},{side.value},"{expr}"')
        return
    _emit(fmt, payload={"id": tag, "side": side.value, "expr": expr}, text=expr)


@runs_app.command("list")
def runs_list(
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
    runs_dir: str | None = typer.Option(
        None,
        "--runs-dir",
        help="Override runs directory (default: $QPP_RUNS_DIR or ~/.qpp/runs).",
    ),
    limit: int = typer.Option(
        20,
        "--limit",
        help="Maximum runs to list.",
    ),
) -> None:
    """List saved verify-all runs, newest first."""
    summaries = [
        summarize_run(run_dir) for run_dir in list_run_dirs(_runs_dir(runs_dir))[: max(limit, 0)]
    ]

    if fmt is OutputFormat.JSON:
        _emit(fmt, payload={"runs": [s.as_json() for s in summaries]}, text="")
        return
    if fmt is OutputFormat.CSV:
        typer.echo("run_id,created_at,order,status,checks")
        for summary in summaries:
            typer.echo(
                f"{summary.run_id or ''},{summary.created_at or ''},"
                f"{'' if summary.order is None else summary.order},"
                f"{summary.status},{len(summary.check_statuses)}"
            )
        return

    if not summaries:
        typer.echo("No runs found.")
        return

    for summary in summaries:
        created_at = summary.created_at or "(unknown time)"
        run_id = summary.run_id or "(unknown id)"
        order = summary.order if summary.order is not None else "default"
        typer.echo(
            f"{summary.status}: {run_id}  {created_at}  order {order}  "
            f"{len(summary.check_statuses)} checks  ({summary.run_dir.name})"
        )


@runs_app.command("show")
def runs_show(
    run: str = typer.Argument(..., help="Run id or run directory name/prefix."),
    fmt: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", help="Output format."),
    runs_dir: str | None = typer.Option(
        None,
        "--runs-dir",
        help="Override runs directory (default: $QPP_RUNS_DIR or ~/.qpp/runs).",
    ),
) -> None:
    """Show details for one run."""
    try:
        run_dir = resolve_run_dir(_runs_dir(runs_dir), run)
    except (RunNotFoundError, RunAmbiguousError) as exc:
        _fail(exc, fmt)

    payload = read_run_record(run_dir)
    if payload is None:
        _fail(RunNotFoundError(f"run.json missing or corrupt in: {run_dir}"), fmt)
    if fmt is OutputFormat.JSON:
        _emit(fmt, payload={"ok": True, "run_dir": str(run_dir), "run": payload}, text="")
        return

    summary = summarize_run(run_dir)
    if fmt is OutputFormat.CSV:
        typer.echo("check,status")
        for key in sorted(summary.check_statuses):
            typer.echo(f"{key},{summary.check_statuses[key]}")
        return

    typer.echo(f"run_dir: {run_dir}")
    typer.echo(f"run_id: {summary.run_id or '(unknown)'}")
    typer.echo(f"created_at: {summary.created_at or '(unknown)'}")
    typer.echo(f"status: {summary.status}")
    for key in sorted(summary.check_statuses):
        typer.echo(f"check {key}: {summary.check_statuses[key]}")


app.add_typer(runs_app, name="runs", help="View saved verify-all runs.")


def main() -> None:
    app()
