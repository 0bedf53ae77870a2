"""config subcommand: show / set / path."""

import typer

from hv_algebra.config import CONFIG_PATH, Config, config_as_dict, save_config_key
from hv_algebra.output import print_error, print_json
from hv_algebra.session import EXIT_FAILURE

app = typer.Typer(name="config", help="Manage hv user defaults.", no_args_is_help=True)

KNOWN_KEYS = (
    "defaults.seed",
    "defaults.samples",
    "defaults.probe_radius",
    "defaults.max_power",
    "defaults.pretty",
)


@app.command("show")
def config_show(ctx: typer.Context) -> None:
    cfg: Config = ctx.obj
    print_json(config_as_dict(cfg))


@app.command("set")
def config_set(
    key: str = typer.Argument(..., help="Dotted config key, e.g. defaults.seed"),
    value: str = typer.Argument(..., help="Value to set"),
) -> None:
    if key not in KNOWN_KEYS:
        print_error("validation_error", f"Unknown key {key!r}", detail={"known": list(KNOWN_KEYS)})
        raise typer.Exit(2)
    try:
        save_config_key(key, value)
        print_json({"ok": True, "key": key, "value": value})
    except Exception as exc:
        print_error("config_error", f"Failed to write config: {exc}")
        raise typer.Exit(EXIT_FAILURE)


@app.command("path")
def config_path() -> None:
    print_json({"path": str(CONFIG_PATH), "exists": CONFIG_PATH.exists()})
