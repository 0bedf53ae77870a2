"""Configuration management for hv-algebra.

User defaults live in a TOML file edited by ``hv config``; the run config of
``hv verify`` is a JSON document validated by :class:`RunConfigModel`.
"""

import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import tomlkit

from hv_algebra.schemas import RunConfigModel

CONFIG_PATH = Path.home() / ".config" / "hv-algebra" / "config.toml"


@dataclass
class Config:
    seed: int = 0
    samples: Optional[int] = None
    probe_radius: int = 3
    max_power: int = 16
    pretty: bool = False
    run_config_path: Optional[str] = None


def load_config(
    run_config_flag: Optional[str] = None,
    pretty_flag: Optional[bool] = None,
) -> Config:
    """Load config with priority: file < env < CLI flags."""
    cfg = Config()

    if CONFIG_PATH.exists():
        try:
            doc = tomlkit.parse(CONFIG_PATH.read_text())
            defaults = doc.get("defaults", {})
            if defaults.get("seed") is not None:
                cfg.seed = int(defaults["seed"])
            if defaults.get("samples") is not None:
                cfg.samples = int(defaults["samples"])
            if defaults.get("probe_radius") is not None:
                cfg.probe_radius = int(defaults["probe_radius"])
            if defaults.get("max_power") is not None:
                cfg.max_power = int(defaults["max_power"])
            if defaults.get("pretty") is not None:
                cfg.pretty = bool(defaults["pretty"])
        except Exception as exc:
            print(
                f"hv: warning: could not parse config file {CONFIG_PATH}: {exc}",
                file=sys.stderr,
            )
            cfg = Config()

    if os.environ.get("HV_SEED"):
        try:
            cfg.seed = int(os.environ["HV_SEED"])
        except ValueError:
            print(
                f"hv: warning: ignoring non-integer HV_SEED={os.environ['HV_SEED']!r}",
                file=sys.stderr,
            )
    if os.environ.get("HV_PRETTY"):
        cfg.pretty = os.environ["HV_PRETTY"].lower() in {"1", "true", "yes"}
    if os.environ.get("HV_CONFIG"):
        cfg.run_config_path = os.environ["HV_CONFIG"]

    if run_config_flag is not None:
        cfg.run_config_path = run_config_flag
    if pretty_flag is not None:
        cfg.pretty = pretty_flag

    if cfg.seed < 0:
        cfg.seed = 0
    if cfg.samples is not None and cfg.samples < 0:
        cfg.samples = None
    if cfg.probe_radius < 1:
        cfg.probe_radius = 3
    if cfg.max_power < 1:
        cfg.max_power = 16

    return cfg


def load_run_config(cfg: Config, path: Optional[str] = None) -> RunConfigModel:
    """The run config at ``path`` (or ``cfg.run_config_path``), else the shipped default.

    User defaults fill in any top-level key the JSON leaves out.
    """
    path = path or cfg.run_config_path
    data: dict[str, Any] = {}
    if path:
        data = json.loads(Path(path).read_text())
        if not isinstance(data, dict):
            raise ValueError(f"run config {path} must be a JSON object")
    data.setdefault("seed", cfg.seed)
    data.setdefault("probe_radius", cfg.probe_radius)
    data.setdefault("max_power", cfg.max_power)
    if cfg.samples is not None and "samples" not in data:
        data["samples"] = {
            key: cfg.samples
            for key in ("foundations", "jacobi", "cocycles", "derivations", "automorphisms")
        }
    return RunConfigModel.model_validate(data)


def save_config_key(dotted_key: str, value: str) -> None:
    CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)

    if CONFIG_PATH.exists():
        doc = tomlkit.parse(CONFIG_PATH.read_text())
    else:
        doc = tomlkit.document()

    parts = dotted_key.split(".", 1)
    if len(parts) == 2:
        section, key = parts
        if section not in doc:
            doc[section] = tomlkit.table()
        doc[section][key] = _coerce_scalar(value)
    else:
        doc[dotted_key] = _coerce_scalar(value)

    CONFIG_PATH.write_text(tomlkit.dumps(doc))


def config_as_dict(cfg: Config) -> dict[str, Any]:
    return {
        "defaults": {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "probe_radius": cfg.probe_radius,
            "max_power": cfg.max_power,
            "pretty": cfg.pretty,
        },
        "run_config": cfg.run_config_path,
    }


def _coerce_scalar(value: str) -> Any:
    lower = value.lower()
    if lower == "true":
        return True
    if lower == "false":
        return False
    try:
        return int(value)
    except ValueError:
        return value
