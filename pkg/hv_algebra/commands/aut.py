"""aut subcommand: apply / compose / invert / factor / lift / laws."""

from typing import Optional

import typer

from hv_algebra.args import load_json_input
from hv_algebra.automorphisms import (
    AutWord,
    InnerAut,
    factor_automorphism,
    lift_automorphism_to_hv,
    verify_group_laws,
)
from hv_algebra.config import Config
from hv_algebra.elements import AlgebraTag
from hv_algebra.groups import GroupInstance
from hv_algebra.output import element_table, emit, print_json
from hv_algebra.parser import parse_element
from hv_algebra.schemas import AutWordModel, ThetaModel
from hv_algebra.serialize import element_data
from hv_algebra.session import EXIT_FAILURE, active_group, fail, reporting_errors

app = typer.Typer(
    name="aut", help="Automorphisms η∘θ of 𝒟₁ and their lifts.", no_args_is_help=True
)

AUT_HELP = (
    'Automorphism JSON: a θ block {"chi", "eps", "a", "b", "c"} or a word '
    '{"inner": {"factors": [[k, z], ...]}, "theta": {...}}'
)


def _word(group: GroupInstance, payload: str) -> AutWord:
    """Accept a bare θ block as the word 1∘θ."""
    data = load_json_input(payload, what="automorphism payload")
    if isinstance(data, dict) and ("theta" in data or "inner" in data):
        return AutWordModel.model_validate(data).build(group)
    theta = ThetaModel.model_validate(data).build(group)
    return AutWord(InnerAut.identity(group), theta)


@app.command("apply")
def aut_apply(
    ctx: typer.Context,
    aut: str = typer.Argument(..., help=AUT_HELP),
    element: str = typer.Argument(..., help="Element of 𝒟₁ (of ℒ with --lift)"),
    lift: bool = typer.Option(False, "--lift", help="Apply the lift to ℒ instead"),
) -> None:
    """π(u) for π = η∘θ."""
    cfg: Config = ctx.obj
    group = active_group(ctx)
    with reporting_errors():
        pi = _word(group, aut)
        tag = AlgebraTag.HV if lift else AlgebraTag.D1
        u = parse_element(element, group, tag)
        result = lift_automorphism_to_hv(pi, seed=cfg.seed)(u) if lift else pi(u)
    emit(element_data(result), pretty=cfg.pretty, table_builder=element_table)


@app.command("compose")
def aut_compose(
    ctx: typer.Context,
    first: str = typer.Argument(..., help="Outer automorphism π₁ (applied last)"),
    second: str = typer.Argument(..., help="Inner automorphism π₂ (applied first)"),
) -> None:
    """Normal form of π₁∘π₂."""
    group = active_group(ctx)
    with reporting_errors():
        word = _word(group, first).compose(_word(group, second))
    print_json(word.to_data())


@app.command("invert")
def aut_invert(ctx: typer.Context, aut: str = typer.Argument(..., help=AUT_HELP)) -> None:
    """Normal form of π⁻¹."""
    group = active_group(ctx)
    with reporting_errors():
        word = _word(group, aut).inverse()
    print_json(word.to_data())


@app.command("factor")
def aut_factor(
    ctx: typer.Context,
    images: Optional[str] = typer.Option(
        None,
        "--images",
        help="JSON object mapping each probe symbol (L(x), I(x)) to its image text",
    ),
    aut: Optional[str] = typer.Option(None, "--aut", help="Factor a given word from its images"),
) -> None:
    """Recover η and θ from the images of L(x) and I(x) on the probe points."""
    if bool(images) == bool(aut):
        fail("validation_error", "Provide exactly one of --images or --aut")
    group = active_group(ctx)
    with reporting_errors():
        if aut:
            word = factor_automorphism(_word(group, aut), group)
        else:
            data = load_json_input(images, what="probe images")
            if not isinstance(data, dict):
                raise ValueError("probe images must be a JSON object")
            parsed = {}
            for key, value in data.items():
                sym = parse_element(key, group, AlgebraTag.D1)
                if len(sym.terms) != 1:
                    raise ValueError(f"{key!r} is not a single basis symbol")
                ((basis, _),) = sym.terms.items()
                parsed[basis] = parse_element(value, group, AlgebraTag.D1).scale(
                    sym.coefficient(basis).inverse()
                )
            word = factor_automorphism(parsed, group)
    print_json(word.to_data())


@app.command("lift")
def aut_lift(
    ctx: typer.Context,
    aut: str = typer.Argument(..., help=AUT_HELP),
    probe: list[str] = typer.Option([], "--probe", "-p", help="ℒ element to map (repeatable)"),
) -> None:
    """Lift an automorphism to ℒ and report its action on the center."""
    cfg: Config = ctx.obj
    group = active_group(ctx)
    with reporting_errors():
        pi = _word(group, aut)
        lifted = lift_automorphism_to_hv(pi, seed=cfg.seed)
        images = {text: str(lifted(parse_element(text, group, AlgebraTag.HV))) for text in probe}
    print_json({"automorphism": pi.to_data(), **lifted.to_data(), "images": images})


@app.command("laws")
def aut_laws(
    ctx: typer.Context,
    samples: int = typer.Option(200, "--samples", "-n", min=1, help="Parameter tuples per law"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed (defaults to config seed)"),
) -> None:
    """Subgroup, normality and projection laws of the θ family."""
    cfg: Config = ctx.obj
    with reporting_errors():
        report = verify_group_laws(
            active_group(ctx), samples=samples, seed=cfg.seed if seed is None else seed
        )
    print_json(report.to_data())
    if not report.passed:
        raise typer.Exit(EXIT_FAILURE)
