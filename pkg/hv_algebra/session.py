"""Shared plumbing for commands: the active group and the error-to-exit-code funnel."""

import json
from contextlib import contextmanager
from typing import Any, Iterator

import typer

from hv_algebra.config import Config, load_run_config
from hv_algebra.errors import (
    HVError,
    NotACocycleError,
    NotADerivationError,
    NotAnAutomorphismError,
)
from hv_algebra.groups import GroupInstance
from hv_algebra.output import print_error
from hv_algebra.schemas import RunConfigModel
from hv_algebra.serialize import to_data

EXIT_FAILURE = 1
EXIT_USAGE = 2

# Errors that mean "the check ran and the answer is no" rather than bad input.
CHECK_FAILURES = (NotACocycleError, NotADerivationError, NotAnAutomorphismError)


def fail(error_type: str, message: str, detail: Any | None = None, code: int = EXIT_USAGE):
    print_error(error_type, message, detail=detail)
    raise typer.Exit(code)


@contextmanager
def reporting_errors() -> Iterator[None]:
    """Turn library errors into a JSON error on stderr and the matching exit code."""
    try:
        yield
    except CHECK_FAILURES as exc:
        fail(exc.error_type, str(exc), to_data(exc.detail), EXIT_FAILURE)
    except HVError as exc:
        fail(exc.error_type, str(exc), to_data(exc.detail))
    except json.JSONDecodeError as exc:
        fail("validation_error", f"invalid JSON: {exc}")
    except ValueError as exc:
        fail("validation_error", str(exc))
    except OSError as exc:
        fail("io_error", str(exc))


def run_config(ctx: typer.Context) -> RunConfigModel:
    """The run config for this invocation, loaded once."""
    cached = ctx.meta.get("hv_run_config")
    if cached is None:
        cfg: Config = ctx.obj
        with reporting_errors():
            cached = load_run_config(cfg)
        ctx.meta["hv_run_config"] = cached
    return cached


def active_group(ctx: typer.Context) -> GroupInstance:
    cached = ctx.meta.get("hv_group")
    if cached is None:
        model = run_config(ctx)
        with reporting_errors():
            cached = model.to_group()
        ctx.meta["hv_group"] = cached
    return cached
