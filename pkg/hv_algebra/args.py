"""JSON payload arguments: inline text, ``-`` for stdin, or ``@path`` for a file."""

import json
from pathlib import Path
from typing import Any

from hv_algebra.output import read_text_arg
from hv_algebra.schemas import CliSchemaModel


def load_json_input(source: str | None, *, what: str = "JSON") -> Any:
    if not source:
        raise ValueError(f"{what} is required")
    if source.startswith("@"):
        text = Path(source[1:]).read_text()
    else:
        text = read_text_arg(source)

    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{what} is not valid JSON: {exc}") from exc


def load_model(model: type[CliSchemaModel], source: str | None):
    """Load a JSON payload and validate it against ``model``."""
    return model.model_validate(load_json_input(source, what=model.cli_label))
