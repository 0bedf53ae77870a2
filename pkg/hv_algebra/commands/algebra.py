"""Top-level element commands: bracket, product, apply."""

from enum import Enum
from typing import Optional

import typer

from hv_algebra.args import load_model
from hv_algebra.automorphisms import lift_automorphism_to_hv
from hv_algebra.brackets import commutator, diffop_product, lie_bracket
from hv_algebra.config import Config
from hv_algebra.derivations import lift_derivation_to_hv
from hv_algebra.elements import AlgebraTag
from hv_algebra.output import element_table, emit
from hv_algebra.parser import parse_element
from hv_algebra.schemas import AutWordModel, DerivationModel, InnerModel, ThetaModel
from hv_algebra.serialize import element_data
from hv_algebra.session import active_group, fail, reporting_errors, run_config


class Algebra(str, Enum):
    w = "w"
    d = "d"
    d1 = "d1"
    hv = "hv"

    @property
    def tag(self) -> AlgebraTag:
        return {
            "w": AlgebraTag.W,
            "d": AlgebraTag.D,
            "d1": AlgebraTag.D1,
            "hv": AlgebraTag.HV,
        }[self.value]


PAYLOAD_MODELS = {
    "theta": ThetaModel,
    "inner": InnerModel,
    "aut": AutWordModel,
    "der": DerivationModel,
}


def bracket(
    ctx: typer.Context,
    lhs: str = typer.Argument(..., help='Left operand, e.g. "L(2)"'),
    rhs: str = typer.Argument(..., help='Right operand, e.g. "L(-2)"'),
    algebra: Algebra = typer.Option(Algebra.hv, "--algebra", "-a", help="Algebra to bracket in"),
) -> None:
    """Lie bracket of two elements ([u, v] in W, 𝒟, 𝒟₁ or ℒ)."""
    cfg: Config = ctx.obj
    group = active_group(ctx)
    with reporting_errors():
        u = parse_element(lhs, group, algebra.tag)
        v = parse_element(rhs, group, algebra.tag)
        if algebra is Algebra.d:
            result = commutator(u, v, max_power=run_config(ctx).max_power)
        else:
            result = lie_bracket(u, v)
    emit(element_data(result), pretty=cfg.pretty, table_builder=element_table)


def product(
    ctx: typer.Context,
    lhs: str = typer.Argument(..., help='Left operand, e.g. "D(1;1)"'),
    rhs: str = typer.Argument(..., help='Right operand, e.g. "D(2;1)"'),
) -> None:
    """Associative product of two differential operators in 𝒟."""
    cfg: Config = ctx.obj
    group = active_group(ctx)
    with reporting_errors():
        u = parse_element(lhs, group, AlgebraTag.D)
        v = parse_element(rhs, group, AlgebraTag.D)
        result = diffop_product(u, v, max_power=run_config(ctx).max_power)
    emit(element_data(result), pretty=cfg.pretty, table_builder=element_table)


def apply(
    ctx: typer.Context,
    element: str = typer.Argument(..., help='Element of 𝒟₁ (or ℒ with --algebra hv)'),
    theta: Optional[str] = typer.Option(None, "--theta", help="θ parameters as JSON or '-'"),
    inner: Optional[str] = typer.Option(None, "--inner", help="Inner automorphism as JSON"),
    aut: Optional[str] = typer.Option(None, "--aut", help="η∘θ word as JSON"),
    der: Optional[str] = typer.Option(None, "--der", help="Derivation as JSON"),
    algebra: Algebra = typer.Option(
        Algebra.d1, "--algebra", "-a", help="d1 applies the map; hv applies its lift to ℒ"
    ),
) -> None:
    """Apply an automorphism or derivation to an element."""
    cfg: Config = ctx.obj
    options = {"theta": theta, "inner": inner, "aut": aut, "der": der}
    chosen = {k: v for k, v in options.items() if v}
    if len(chosen) != 1:
        fail("validation_error", "Provide exactly one of --theta, --inner, --aut, --der")
    if algebra not in (Algebra.d1, Algebra.hv):
        fail("validation_error", "apply works on d1 or hv")
    group = active_group(ctx)
    ((kind, payload),) = chosen.items()
    with reporting_errors():
        morphism = load_model(PAYLOAD_MODELS[kind], payload).build(group)
        u = parse_element(element, group, algebra.tag)
        if algebra is Algebra.hv:
            lift = lift_derivation_to_hv if kind == "der" else lift_automorphism_to_hv
            morphism = lift(morphism, group, seed=cfg.seed)
        result = morphism(u)
    emit(element_data(result), pretty=cfg.pretty, table_builder=element_table)
