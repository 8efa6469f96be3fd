"""Command-line interface for rank2lift.

Verbs:
- ``lift``: realify a complex family file
- ``check``: certify phase/norm retrieval and related properties
- ``generate``: write harmonic frames, MUBs and tight fusion frames
- ``angles``: k-angular spectra, optionally of the lifted frame

Exit codes: 0 pass, 1 certified failure, 2 usage or data error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Callable, NoReturn, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table
from rich.theme import Theme

from . import __version__
from .config import Settings, get_settings
from .errors import Rank2LiftError
from .io import FamilyFile, ReportFile
from .orchestrator import CHECK_KINDS, GENERATE_KINDS, CheckRunner
from .utils.logger import setup_logging

custom_theme = Theme({
    "info": "cyan",
    "warning": "yellow",
    "error": "red bold",
    "success": "green bold",
    "muted": "dim",
})

console = Console(theme=custom_theme)
app = typer.Typer(
    name="rank2lift",
    help="Phase retrieval, frames and MUBs through the complex-to-real lift",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"[info]rank2lift[/info] v{__version__}")
        raise typer.Exit()


@app.callback()
def default_command(
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level",
        help="Log level for stderr output (default from RANK2LIFT_LOG_LEVEL or INFO)",
    ),
    version: Optional[bool] = typer.Option(
        None,
        "--version", "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
) -> None:
    """Certify phase retrieval for real and complex families."""
    settings = get_settings()
    setup_logging(
        settings.log_dir,
        level=(log_level or settings.log_level).upper(),
        file=settings.log_dir is not None,
    )


def _settings(
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    restarts: Optional[int] = None,
    tol_rank: Optional[float] = None,
    tol_eq: Optional[float] = None,
    cluster_width: Optional[float] = None,
) -> Settings:
    return get_settings().with_overrides(
        seed=seed,
        samples=samples,
        restarts=restarts,
        rank_tol=tol_rank,
        eq_tol=tol_eq,
        cluster_width=cluster_width,
    )


def _fail(message: str) -> NoReturn:
    console.print(f"[error]Error:[/error] {message}")
    raise typer.Exit(EXIT_ERROR)


def _load(path: Path) -> FamilyFile:
    return FamilyFile.load(path)


def _emit_family(family: FamilyFile, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(json.dumps(family.model_dump(mode="json", exclude_none=True), indent=2))
        return
    try:
        family.save(out)
    except Rank2LiftError as e:
        _fail(str(e))
    console.print(f"[info]Wrote[/info] {out} [muted]({family.kind}, field {family.field}, dim {family.dim}, {len(family.entries)} entries)[/muted]")


def _emit_report(report: ReportFile, out: Optional[Path], as_json: bool) -> None:
    if out is not None:
        try:
            report.save(out)
        except Rank2LiftError as e:
            _fail(str(e))
    if as_json:
        typer.echo(json.dumps(report.model_dump(mode="json"), indent=2))
        return
    _show_report(report)
    if out is not None:
        console.print(f"[info]Full report:[/info] {out}")


def _save_error_report(report: ReportFile, out: Optional[Path]) -> None:
    if out is None:
        return
    try:
        report.save(out)
    except Rank2LiftError as e:
        console.print(f"[warning]Could not write report:[/warning] {e}")


def _run_with_progress(runner: CheckRunner, action: Callable[[], ReportFile], quiet: bool) -> ReportFile:
    if quiet:
        return action()
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("Starting...", total=None)

        def on_progress(message: str, current: int, total: int) -> None:
            progress.update(task, completed=current, total=total, description=message)

        runner.on_progress = on_progress
        return action()


SEED_OPTION = typer.Option(None, "--seed", help="Root seed for all random substreams")
SAMPLES_OPTION = typer.Option(None, "--samples", help="Random sphere samples per search")
RESTARTS_OPTION = typer.Option(None, "--restarts", help="Local minimisation restarts per search")
TOL_RANK_OPTION = typer.Option(None, "--tol-rank", help="Relative singular value threshold")
TOL_EQ_OPTION = typer.Option(None, "--tol-eq", help="Scalar equality threshold")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write the result to this JSON file")
JSON_OPTION = typer.Option(False, "--json", help="Print the report JSON to stdout")


@app.command()
def lift(
    input: Path = typer.Argument(..., help="Complex family file"),
    out: Optional[Path] = OUT_OPTION,
) -> None:
    """Lift a complex family to R^{2n}.

    Vectors become planes S_v, subspaces double their dimension, fusion
    frames keep their weights.

    Examples:
        rank2lift lift frame.json --out lifted.json
    """
    try:
        family = _load(input)
        lifted = CheckRunner(settings=_settings()).lift(family)
    except (Rank2LiftError, ValidationError) as e:
        _fail(str(e))
    _emit_family(lifted, out)


@app.command()
def check(
    kind: str = typer.Argument(..., help=f"One of: {', '.join(CHECK_KINDS)}"),
    input: Path = typer.Argument(..., help="Family file"),
    seed: Optional[int] = SEED_OPTION,
    samples: Optional[int] = SAMPLES_OPTION,
    restarts: Optional[int] = RESTARTS_OPTION,
    tol_rank: Optional[float] = TOL_RANK_OPTION,
    tol_eq: Optional[float] = TOL_EQ_OPTION,
    out: Optional[Path] = OUT_OPTION,
    as_json: bool = JSON_OPTION,
) -> None:
    """Run a certification check and exit with its verdict.

    Examples:
        rank2lift check pr frame.json --seed 7
        rank2lift check complement frame.json --out report.json
    """
    settings = get_settings()
    family: Optional[FamilyFile] = None
    try:
        settings = _settings(seed, samples, restarts, tol_rank, tol_eq)
        family = loaded = _load(input)
        runner = CheckRunner(settings=settings)
        report = _run_with_progress(runner, lambda: runner.check(kind, loaded), quiet=as_json)
    except (Rank2LiftError, ValidationError) as e:
        _save_error_report(
            ReportFile.from_error(
                f"check {kind}",
                e,
                tolerances=settings.tolerance(),
                seed=settings.seed if seed is None else seed,
                input_digest=family.digest() if family is not None else None,
            ),
            out,
        )
        _fail(str(e))
    _emit_report(report, out, as_json)
    raise typer.Exit(report.exit_code)


@app.command()
def generate(
    kind: str = typer.Argument(..., help=f"One of: {', '.join(GENERATE_KINDS)}"),
    m: Optional[int] = typer.Option(None, "-m", help="Number of vectors or subspaces"),
    n: Optional[int] = typer.Option(None, "-n", help="Complex dimension"),
    p: Optional[int] = typer.Option(None, "-p", help="Prime dimension for MUBs"),
    out: Optional[Path] = OUT_OPTION,
) -> None:
    """Generate a verified family file.

    Examples:
        rank2lift generate harmonic -m 5 -n 3 --out harmonic.json
        rank2lift generate mub -p 5
    """
    try:
        family = CheckRunner(settings=_settings()).generate(kind, m=m, n=n, p=p)
    except (Rank2LiftError, ValidationError) as e:
        _fail(str(e))
    _emit_family(family, out)


@app.command()
def angles(
    input: Path = typer.Argument(..., help="Vector or subspace family file"),
    transfer: bool = typer.Option(False, "--transfer", help="Also compare with the spectrum of the lifted planes"),
    cluster_width: Optional[float] = typer.Option(None, "--cluster-width", help="Merge values closer than this"),
    out: Optional[Path] = OUT_OPTION,
    as_json: bool = JSON_OPTION,
) -> None:
    """Classify a family as k-angular."""
    settings = get_settings()
    family: Optional[FamilyFile] = None
    try:
        settings = _settings(cluster_width=cluster_width)
        family = _load(input)
        report = CheckRunner(settings=settings).angles(family, transfer=transfer)
    except (Rank2LiftError, ValidationError) as e:
        _save_error_report(
            ReportFile.from_error(
                "angles",
                e,
                tolerances=settings.tolerance(),
                seed=settings.seed,
                input_digest=family.digest() if family is not None else None,
            ),
            out,
        )
        _fail(str(e))
    _emit_report(report, out, as_json)
    if transfer:
        raise typer.Exit(report.exit_code)


def _show_report(report: ReportFile) -> None:
    """Display a report as a status panel and a summary table."""
    passed = report.exit_code == EXIT_PASS
    status_style = "success" if passed else "error"
    console.print(Panel(
        f"[{status_style}]{report.verdict}[/{status_style}]",
        title=report.command,
        border_style=status_style,
    ))

    table = Table(title="Summary", show_header=True, header_style="bold cyan")
    table.add_column("Check", style="dim")
    table.add_column("Verdict")
    table.add_column("Samples", justify="right")
    table.add_column("Restarts", justify="right")
    table.add_column("Residual", justify="right")
    for entry in report.reports:
        table.add_row(
            entry["check"],
            entry["verdict"],
            str(entry["samples_used"]),
            str(entry["restarts_used"]),
            f"{entry['residual']:.3e}",
        )
    console.print(table)

    if report.witnesses:
        console.print("[info]Witness pair:[/info]")
        console.print(f"  x = {report.witnesses['x']}")
        console.print(f"  y = {report.witnesses['y']}")
    for entry in report.reports:
        if entry.get("violating_subset") is not None:
            console.print(f"[warning]Violating subset:[/warning] {entry['violating_subset']}")
        for note in entry.get("notes", []):
            console.print(f"  [muted]•[/muted] {note}")


def main() -> None:
    """Entry point for the CLI."""
    try:
        app()
    except KeyboardInterrupt:
        console.print("\n[warning]Interrupted by user[/warning]")
        sys.exit(130)
