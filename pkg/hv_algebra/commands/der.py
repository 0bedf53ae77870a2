"""der subcommand: apply / check / decompose / lift."""

from typing import Optional

import typer

from hv_algebra.args import load_model
from hv_algebra.config import Config
from hv_algebra.derivations import decompose_degree0, leibniz_defect, lift_derivation_to_hv
from hv_algebra.elements import AlgebraTag
from hv_algebra.output import element_table, emit, parameters_table, print_json
from hv_algebra.parser import parse_element
from hv_algebra.sampling import Sampler
from hv_algebra.schemas import DerivationModel
from hv_algebra.serialize import element_data
from hv_algebra.session import EXIT_FAILURE, active_group, reporting_errors

app = typer.Typer(name="der", help="Derivations of 𝒟₁ and their lifts.", no_args_is_help=True)

DER_ARGUMENT = typer.Argument(
    ..., help='Derivation JSON, e.g. \'{"sigma": 1}\' or \'[{"ad": "L(1)"}, {"sigma": 3}]\''
)


def _derivation(ctx: typer.Context, payload: str):
    group = active_group(ctx)
    with reporting_errors():
        return load_model(DerivationModel, payload).build(group)


@app.command("apply")
def der_apply(
    ctx: typer.Context,
    der: str = DER_ARGUMENT,
    element: str = typer.Argument(..., help="Element of 𝒟₁ (of ℒ with --lift)"),
    lift: bool = typer.Option(False, "--lift", help="Apply the lift to ℒ instead"),
) -> None:
    """D(u) for a derivation D."""
    cfg: Config = ctx.obj
    d = _derivation(ctx, der)
    with reporting_errors():
        tag = AlgebraTag.HV if lift else AlgebraTag.D1
        u = parse_element(element, d.group, tag)
        result = lift_derivation_to_hv(d, seed=cfg.seed)(u) if lift else d(u)
    emit(element_data(result), pretty=cfg.pretty, table_builder=element_table)


@app.command("check")
def der_check(
    ctx: typer.Context,
    der: str = DER_ARGUMENT,
    samples: int = typer.Option(1000, "--samples", "-n", min=1, help="Random pairs to test"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed (defaults to config seed)"),
    lift: bool = typer.Option(False, "--lift", help="Check the lift on ℒ instead"),
) -> None:
    """Leibniz rule on seeded random pairs."""
    cfg: Config = ctx.obj
    d = _derivation(ctx, der)
    seed = cfg.seed if seed is None else seed
    with reporting_errors():
        target = lift_derivation_to_hv(d, seed=seed) if lift else d
        tag = AlgebraTag.HV if lift else AlgebraTag.D1
        sampler = Sampler(d.group, seed)
        witness = None
        for _ in range(samples):
            u, v = sampler.element(tag), sampler.element(tag)
            defect = leibniz_defect(target, u, v)
            if not defect.is_zero():
                witness = {"u": str(u), "v": str(v), "defect": str(defect)}
                break
    print_json({"passed": witness is None, "samples": samples, "seed": seed, "witness": witness})
    if witness is not None:
        raise typer.Exit(EXIT_FAILURE)


@app.command("decompose")
def der_decompose(ctx: typer.Context, der: str = DER_ARGUMENT) -> None:
    """Write a degree-0 derivation as ξ_μ + a·σ₁ + b·σ₂ + c₀·σ₃."""
    cfg: Config = ctx.obj
    d = _derivation(ctx, der)
    with reporting_errors():
        result = decompose_degree0(d, d.group)
    emit(result.to_data(), pretty=cfg.pretty, table_builder=parameters_table)


@app.command("lift")
def der_lift(
    ctx: typer.Context,
    der: str = DER_ARGUMENT,
    probe: list[str] = typer.Option([], "--probe", "-p", help="ℒ element to map (repeatable)"),
) -> None:
    """Lift a derivation to ℒ and report its action on the center."""
    d = _derivation(ctx, der)
    cfg: Config = ctx.obj
    with reporting_errors():
        lifted = lift_derivation_to_hv(d, seed=cfg.seed)
        images = {
            text: str(lifted(parse_element(text, d.group, AlgebraTag.HV))) for text in probe
        }
    print_json({"derivation": d.describe(), **lifted.to_data(), "images": images})
