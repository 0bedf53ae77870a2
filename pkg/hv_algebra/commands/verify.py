"""verify: run the seeded property suites and report."""

import json
from pathlib import Path
from typing import Optional

import typer

from hv_algebra.config import Config, load_run_config
from hv_algebra.output import emit, err_console, report_table
from hv_algebra.session import EXIT_FAILURE, fail, reporting_errors
from hv_algebra.suites import SUITE_NAMES, SuiteResult, run_suite


def verify(
    ctx: typer.Context,
    config: Optional[str] = typer.Option(
        None, "--config", help="Run config JSON (falls back to HV_CONFIG, then the default)"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Override the run seed"),
    json_out: Optional[str] = typer.Option(
        None, "--json", help="Also write the report to this path"
    ),
    suite: list[str] = typer.Option(
        [], "--suite", "-s", help=f"Run only these suites ({', '.join(SUITE_NAMES)})"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Progress lines on stderr"),
) -> None:
    """Run the property suites; exit 0 iff every selected suite passes."""
    cfg: Config = ctx.obj
    with reporting_errors():
        model = load_run_config(cfg, config)
        settings = model.to_settings(seed)
    selected = suite or model.suites
    unknown = [name for name in selected if name not in SUITE_NAMES]
    if unknown:
        fail("validation_error", f"Unknown suite(s): {', '.join(unknown)}")

    def progress(result: SuiteResult) -> None:
        status = "[green]pass[/green]" if result.passed else "[red]fail[/red]"
        err_console.print(
            f"{result.name}: {status} ({result.samples} samples, {result.seconds:.2f}s)"
        )

    with reporting_errors():
        report = run_suite(settings, selected, progress=progress if verbose else None)
        data = report.to_data()
        out_path = json_out or model.output
        if out_path:
            Path(out_path).write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n")
    emit(data, pretty=cfg.pretty, table_builder=report_table)
    if not report.passed:
        raise typer.Exit(EXIT_FAILURE)
