"""hv CLI root application."""

from importlib.metadata import version
from typing import Optional

import typer

from hv_algebra.commands import algebra, aut, cocycle, config_cmd, der
from hv_algebra.commands.verify import verify
from hv_algebra.config import load_config


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"hv-algebra {version('hv-algebra')}")
        raise typer.Exit()


app = typer.Typer(
    name="hv",
    help="[bold]hv[/bold]: exact computations in the twisted Heisenberg-Virasoro algebra.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

app.command("bracket")(algebra.bracket)
app.command("product")(algebra.product)
app.command("apply")(algebra.apply)
app.command("verify")(verify)
app.add_typer(cocycle.app, name="cocycle")
app.add_typer(der.app, name="der")
app.add_typer(aut.app, name="aut")
app.add_typer(config_cmd.app, name="config")


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[str] = typer.Option(
        None,
        "--config",
        envvar="HV_CONFIG",
        help="Run config JSON: group, field, seed, samples, suites",
        show_envvar=True,
    ),
    pretty: Optional[bool] = typer.Option(
        None,
        "--pretty/--no-pretty",
        envvar="HV_PRETTY",
        help="Render Rich tables / pretty JSON when available (overrides config)",
        show_envvar=True,
    ),
    _version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-V",
        callback=_version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
) -> None:
    """Brackets, cocycles, derivations and automorphisms over exact fields."""
    ctx.ensure_object(dict)
    ctx.obj = load_config(run_config_flag=config, pretty_flag=pretty)
