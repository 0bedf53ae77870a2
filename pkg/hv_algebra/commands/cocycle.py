"""cocycle subcommand: eval / verify / extract / oracle."""

from enum import Enum
from typing import Optional

import typer

from hv_algebra.args import load_model
from hv_algebra.cohomology import (
    BilinearForm,
    canonical_cocycles,
    extract_class,
    solve_cubic_fe,
    solve_linear_fe,
    verify_cocycle,
)
from hv_algebra.config import Config
from hv_algebra.elements import AlgebraTag
from hv_algebra.output import emit, parameters_table, print_json
from hv_algebra.parser import parse_element
from hv_algebra.schemas import CocycleModel
from hv_algebra.session import EXIT_FAILURE, active_group, fail, reporting_errors, run_config

app = typer.Typer(
    name="cocycle", help="2-cocycles of 𝒟₁ and the Witt algebra.", no_args_is_help=True
)


class Oracle(str, Enum):
    cubic = "cubic"
    linear = "linear"


FORM_OPTION = typer.Option(
    None, "--form", "-f", help="Named cocycle: psi, psi1, psi2, psi3, psi3_prime"
)
COCYCLE_OPTION = typer.Option(
    None, "--cocycle", "-c", help="Cocycle JSON {a, b, c, cprime, boundary} or '-'"
)


def _resolve(
    ctx: typer.Context, form: str | None, cocycle: str | None
) -> tuple[BilinearForm, AlgebraTag]:
    if bool(form) == bool(cocycle):
        fail("validation_error", "Provide exactly one of --form or --cocycle")
    if form:
        forms = canonical_cocycles(run_config(ctx).cocycles.psi2_degree)
        if form not in forms:
            fail("validation_error", f"Unknown form {form!r}", {"known": sorted(forms)})
        return forms[form], AlgebraTag.W if form == "psi" else AlgebraTag.D1
    with reporting_errors():
        return load_model(CocycleModel, cocycle).build(active_group(ctx)), AlgebraTag.D1


@app.command("eval")
def cocycle_eval(
    ctx: typer.Context,
    lhs: str = typer.Argument(..., help="First argument, e.g. \"L(2)\""),
    rhs: str = typer.Argument(..., help="Second argument, e.g. \"L(-2)\""),
    form: Optional[str] = FORM_OPTION,
    cocycle: Optional[str] = COCYCLE_OPTION,
) -> None:
    """Evaluate α(u, v)."""
    cfg: Config = ctx.obj
    alpha, tag = _resolve(ctx, form, cocycle)
    group = active_group(ctx)
    with reporting_errors():
        value = alpha(parse_element(lhs, group, tag), parse_element(rhs, group, tag))
    emit({"value": str(value)}, pretty=cfg.pretty, table_builder=parameters_table)


@app.command("verify")
def cocycle_verify(
    ctx: typer.Context,
    form: Optional[str] = FORM_OPTION,
    cocycle: Optional[str] = COCYCLE_OPTION,
    samples: int = typer.Option(1000, "--samples", "-n", min=1, help="Random triples to test"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed (defaults to config seed)"),
    batches: int = typer.Option(1, "--batches", min=1, help="Independent seeded batches"),
) -> None:
    """Check antisymmetry and the cocycle identity on seeded random triples."""
    cfg: Config = ctx.obj
    alpha, tag = _resolve(ctx, form, cocycle)
    with reporting_errors():
        report = verify_cocycle(
            alpha,
            active_group(ctx),
            samples=samples,
            seed=cfg.seed if seed is None else seed,
            tag=tag,
            batches=batches,
        )
    print_json(report.to_data())
    if not report.passed:
        raise typer.Exit(EXIT_FAILURE)


@app.command("extract")
def cocycle_extract(
    ctx: typer.Context,
    form: Optional[str] = FORM_OPTION,
    cocycle: Optional[str] = COCYCLE_OPTION,
) -> None:
    """Coordinates (a, b, c) of [α] in the basis [ψ₁], [ψ₂], [ψ₃]."""
    cfg: Config = ctx.obj
    alpha, tag = _resolve(ctx, form, cocycle)
    with reporting_errors():
        klass = extract_class(alpha, active_group(ctx), tag=tag)
    emit(klass.to_data(), pretty=cfg.pretty, table_builder=parameters_table)


@app.command("oracle")
def cocycle_oracle(
    ctx: typer.Context,
    equation: Oracle = typer.Argument(..., help="cubic: f(k) on Z; linear: f(x) on the group"),
    window: int = typer.Option(10, "--window", "-N", min=3, help="Search window |k| ≤ N"),
) -> None:
    """Exact solution space of a functional equation over a finite window."""
    with reporting_errors():
        if equation is Oracle.cubic:
            solution = solve_cubic_fe(window)
        else:
            solution = solve_linear_fe(window, active_group(ctx))
    print_json(solution.to_data())
