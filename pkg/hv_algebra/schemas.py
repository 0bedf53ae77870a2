"""Pydantic schemas for the JSON payloads the CLI accepts.

Strict by default (`extra="forbid"`). Scalars travel as strings so no value
ever passes through a float; integers are accepted as a convenience.
"""

from typing import Any, ClassVar, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError
from pydantic import field_validator, model_validator

from hv_algebra.automorphisms import AutWord, InnerAut, ThetaAut
from hv_algebra.cohomology import Cocycle, LinearFunctional
from hv_algebra.derivations import Derivation
from hv_algebra.elements import AlgebraTag
from hv_algebra.groups import AdditiveMap, GroupElement, GroupInstance, GroupKind, make_group
from hv_algebra.parser import parse_element
from hv_algebra.scalars import FieldConfig, Scalar, as_scalar
from hv_algebra.suites import DEFAULT_SAMPLES, SUITE_NAMES, SuiteSettings

ScalarText = Union[StrictStr, StrictInt]
# a generator value as one scalar, or as its [rational, sqrt(d)] parts
PairingValue = Union[StrictStr, StrictInt, tuple[ScalarText, ScalarText]]


class CliSchemaModel(BaseModel):
    """Pydantic base model with compact CLI-friendly error formatting."""

    model_config = ConfigDict(extra="forbid")
    cli_label: ClassVar[str] = "payload"

    @classmethod
    def model_validate(  # type: ignore[override]
        cls,
        obj: Any,
        *,
        strict: bool | None = None,
        extra: str | None = None,
        from_attributes: bool | None = None,
        context: Any | None = None,
        by_alias: bool | None = None,
        by_name: bool | None = None,
    ):
        try:
            return super().model_validate(
                obj,
                strict=strict,
                extra=extra,
                from_attributes=from_attributes,
                context=context,
                by_alias=by_alias,
                by_name=by_name,
            )
        except ValidationError as exc:
            messages: list[str] = []
            for err in exc.errors():
                loc = ".".join(str(part) for part in err.get("loc", []))
                msg = err.get("msg", "invalid value")
                messages.append(f"{loc}: {msg}" if loc else msg)
            raise ValueError(f"{cls.cli_label} failed validation ({'; '.join(messages)})") from exc


def _scalar(group: GroupInstance, value: ScalarText) -> Scalar:
    if isinstance(value, int):
        return group.scalar(value)
    return group.scalar(Scalar.parse(value))


def parse_group_element(group: GroupInstance, value: str | int | list) -> GroupElement:
    """``"1,0"``, ``"(1,0)"``, ``[1, 0]`` or ``3`` as an element of ``group``."""
    if isinstance(value, list):
        coords = value
    elif isinstance(value, int):
        coords = [value]
    else:
        coords = [c.strip() for c in value.strip().strip("()").split(",")]
    return group.element(*coords)


def _pairing_value(field_cfg: FieldConfig, value: PairingValue) -> Scalar:
    if isinstance(value, tuple):
        rational, radical = (as_scalar(str(part)).to_fraction() for part in value)
        if not radical:
            return field_cfg.scalar(rational)
        return field_cfg.scalar(rational + field_cfg.sqrt() * radical)
    if isinstance(value, int):
        return field_cfg.scalar(value)
    return field_cfg.scalar(Scalar.parse(value))


class FieldModel(CliSchemaModel):
    cli_label = "field block"

    mode: Literal["rational", "quadratic"] = "rational"
    d: StrictInt | None = None

    @model_validator(mode="after")
    def validate_d(self) -> "FieldModel":
        if self.mode == "quadratic" and self.d is None:
            raise ValueError("quadratic mode needs d")
        if self.mode == "rational" and self.d is not None:
            raise ValueError("rational mode takes no d")
        return self

    def to_field(self) -> FieldConfig:
        return FieldConfig(self.mode, self.d)


class GroupModel(CliSchemaModel):
    cli_label = "group block"

    group: Literal["Z", "Z2", "Z3", "Z4", "Q"] = "Z"
    pairing: list[PairingValue] = Field(default_factory=lambda: ["1"])
    field: FieldModel = Field(default_factory=FieldModel)

    @model_validator(mode="after")
    def validate_arity(self) -> "GroupModel":
        rank = GroupKind(self.group).rank
        if len(self.pairing) != rank:
            raise ValueError(f"group {self.group} needs {rank} pairing value(s)")
        return self

    def to_group(self) -> GroupInstance:
        field_cfg = self.field.to_field()
        values = [_pairing_value(field_cfg, v) for v in self.pairing]
        return make_group(GroupKind(self.group), values, field_cfg)


class ThetaModel(CliSchemaModel):
    cli_label = "theta payload"

    chi: list[ScalarText] | None = None
    eps: ScalarText = "1"
    a: ScalarText = "0"
    b: ScalarText = "0"
    c: ScalarText = "1"

    def build(self, group: GroupInstance) -> ThetaAut:
        chi = None if self.chi is None else [_scalar(group, v) for v in self.chi]
        return ThetaAut.build(
            group,
            chi,
            _scalar(group, self.eps),
            _scalar(group, self.a),
            _scalar(group, self.b),
            _scalar(group, self.c),
        )


class InnerModel(CliSchemaModel):
    cli_label = "inner payload"

    factors: list[tuple[ScalarText, Union[StrictStr, StrictInt, list[StrictInt]]]] = Field(
        default_factory=list
    )

    def build(self, group: GroupInstance) -> InnerAut:
        return InnerAut(
            group,
            tuple((_scalar(group, k), parse_group_element(group, z)) for k, z in self.factors),
        )


class AutWordModel(CliSchemaModel):
    cli_label = "automorphism payload"

    inner: InnerModel = Field(default_factory=InnerModel)
    theta: ThetaModel = Field(default_factory=ThetaModel)

    def build(self, group: GroupInstance) -> AutWord:
        return AutWord(self.inner.build(group), self.theta.build(group))


class XiModel(CliSchemaModel):
    cli_label = "xi term"

    mu: list[ScalarText]


class DerivationTermModel(CliSchemaModel):
    """Exactly one of ``xi``, ``sigma`` or ``ad`` with an optional coefficient."""

    cli_label = "derivation term"

    coeff: ScalarText = "1"
    xi: XiModel | None = None
    sigma: Literal[1, 2, 3] | None = None
    ad: StrictStr | None = None

    @model_validator(mode="after")
    def validate_exactly_one(self) -> "DerivationTermModel":
        chosen = [name for name in ("xi", "sigma", "ad") if getattr(self, name) is not None]
        if len(chosen) != 1:
            raise ValueError("a derivation term needs exactly one of xi, sigma, ad")
        return self

    def build(self, group: GroupInstance) -> Derivation:
        if self.xi is not None:
            mu = AdditiveMap(group, tuple(_scalar(group, v) for v in self.xi.mu))
            term = Derivation.xi(mu)
        elif self.sigma is not None:
            term = Derivation.sigma(group, self.sigma)
        else:
            term = Derivation.inner(parse_element(self.ad, group, AlgebraTag.D1))
        return term.scale(_scalar(group, self.coeff))


class DerivationModel(CliSchemaModel):
    cli_label = "derivation payload"

    terms: list[DerivationTermModel]

    @model_validator(mode="before")
    @classmethod
    def wrap_terms(cls, data: Any) -> Any:
        if isinstance(data, list):
            return {"terms": data}
        if isinstance(data, dict) and "terms" not in data:
            return {"terms": [data]}
        return data

    def build(self, group: GroupInstance) -> Derivation:
        out = Derivation.zero(group)
        for term in self.terms:
            out = out + term.build(group)
        return out


class CocycleModel(CliSchemaModel):
    """α = a·ψ₁ + b·ψ₂ + c·ψ₃ + cprime·ψ₃′ + ψ_g with g given on symbols."""

    cli_label = "cocycle payload"

    a: ScalarText = "0"
    b: ScalarText = "0"
    c: ScalarText = "0"
    cprime: ScalarText = "0"
    boundary: list[tuple[StrictStr, ScalarText]] = Field(default_factory=list)

    def build(self, group: GroupInstance) -> Cocycle:
        values = {}
        for text, value in self.boundary:
            element = parse_element(text, group, AlgebraTag.D1)
            if len(element.terms) != 1:
                raise ValueError(f"boundary key {text!r} must be a single basis symbol")
            ((sym, coeff),) = element.terms.items()
            values[sym] = _scalar(group, value) / coeff
        return Cocycle(
            group,
            _scalar(group, self.a),
            _scalar(group, self.b),
            _scalar(group, self.c),
            _scalar(group, self.cprime),
            LinearFunctional(group, values),
        )


class CocycleKnobsModel(CliSchemaModel):
    cli_label = "run config.cocycles"

    psi2_degree: StrictInt = Field(default=3, ge=1, le=8)


class RunConfigModel(GroupModel):
    """The JSON run config of ``hv verify``; the group block sits at top level."""

    cli_label = "run config"

    seed: StrictInt = Field(default=0, ge=0, lt=2**64)
    samples: dict[StrictStr, StrictInt] = Field(default_factory=dict)
    probe_radius: StrictInt = Field(default=3, ge=1, le=16)
    window: StrictInt = Field(default=10, ge=3, le=40)
    suites: list[StrictStr] = Field(default_factory=lambda: list(SUITE_NAMES))
    output: StrictStr | None = None
    max_power: StrictInt = Field(default=16, ge=1)
    batches: StrictInt = Field(default=1, ge=1)
    cocycles: CocycleKnobsModel = Field(default_factory=CocycleKnobsModel)

    @field_validator("samples")
    @classmethod
    def validate_samples(cls, value: dict[str, int]) -> dict[str, int]:
        unknown = sorted(set(value) - set(DEFAULT_SAMPLES))
        if unknown:
            raise ValueError(f"unknown sample key(s): {', '.join(unknown)}")
        if any(v < 0 for v in value.values()):
            raise ValueError("sample counts must be non-negative")
        return value

    @field_validator("suites")
    @classmethod
    def validate_suites(cls, value: list[str]) -> list[str]:
        unknown = [name for name in value if name not in SUITE_NAMES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        return value

    def to_settings(self, seed: int | None = None) -> SuiteSettings:
        return SuiteSettings(
            group=self.to_group(),
            seed=self.seed if seed is None else seed,
            samples={**DEFAULT_SAMPLES, **self.samples},
            probe_radius=self.probe_radius,
            window=self.window,
            psi2_degree=self.cocycles.psi2_degree,
            batches=self.batches,
            max_power=self.max_power,
        )
