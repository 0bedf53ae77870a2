"""Lifting derivations and automorphisms of 𝒟₁ to ℒ.

ℒ = 𝒟₁ ⊕ span(C_L, C_I, C_LI) with [u, v]_ℒ = [u, v] + Σ_j ω_j(u, v)·C_j.
A lift is û = φ(u) + Σ_j φ_j(u)·C_j on 𝒟₁ together with a matrix M on the
center. For each j the pulled-back form β_j (Leibniz or homomorphism form of
ω_j) must equal φ_j([u, v]) + Σ_k M_jk·ω_k(u, v): the class of β_j gives
row j of M, and the coboundary left over gives φ_j.
"""

from dataclasses import dataclass, field
from typing import Callable, Literal

from hv_algebra.brackets import project_to_d1
from hv_algebra.cohomology import (
    CENTRAL_FORMS,
    BilinearForm,
    CohomologyClass,
    RecoveredFunctional,
    class_combination,
    extract_class,
    psi3_prime,
    recover_boundary,
    verify_cocycle,
)
from hv_algebra.elements import (
    CENTRAL_KINDS,
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    retag,
)
from hv_algebra.errors import NotADerivationError, NotAnAutomorphismError, TagError
from hv_algebra.groups import GroupInstance
from hv_algebra.scalars import ZERO, Scalar

LinearMap = Callable[[AlgebraElement], AlgebraElement]
LiftKind = Literal["derivation", "automorphism"]

DEFAULT_VERIFY_SAMPLES = 64

_SYMBOLS = {kind: BasisSymbol(kind) for kind in CENTRAL_KINDS}


def _column(klass: CohomologyClass) -> dict[SymbolKind, Scalar]:
    """Coefficients of ω_k reproducing a class: ω_I ~ ψ₁, ω_L ~ ψ₂/12, ω_LI ~ ψ₃."""
    return {
        SymbolKind.C_L: klass.b * 12,
        SymbolKind.C_I: klass.a,
        SymbolKind.C_LI: klass.c,
    }


class _CachedMap:
    """A linear map on 𝒟₁ memoized on basis symbols."""

    def __init__(self, base: LinearMap, group: GroupInstance) -> None:
        self.base = base
        self.group = group
        self._cache: dict[BasisSymbol, AlgebraElement] = {}

    def on_symbol(self, sym: BasisSymbol) -> AlgebraElement:
        out = self._cache.get(sym)
        if out is None:
            out = self.base(AlgebraElement.basis(AlgebraTag.D1, self.group, sym))
            self._cache[sym] = out
        return out

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        acc: dict[BasisSymbol, Scalar] = {}
        for sym, coeff in u.terms.items():
            for out, value in self.on_symbol(sym).terms.items():
                acc[out] = acc.get(out, ZERO) + coeff * value
        return AlgebraElement._canonical(AlgebraTag.D1, self.group, acc)


@dataclass
class LiftedMap:
    """A linear map on ℒ built from a map on 𝒟₁ plus central data."""

    group: GroupInstance
    kind: LiftKind
    base: _CachedMap
    corrections: dict[SymbolKind, RecoveredFunctional]
    central_images: dict[SymbolKind, AlgebraElement] = field(default_factory=dict)

    def _lift_d1(self, u: AlgebraElement) -> AlgebraElement:
        out = retag(self.base(u), AlgebraTag.HV)
        extra = [(_SYMBOLS[j], phi(u)) for j, phi in self.corrections.items()]
        return out + AlgebraElement.build(AlgebraTag.HV, self.group, extra)

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        if u.tag is not AlgebraTag.HV:
            raise TagError(f"lifted maps act on HV, got {u.tag.value}")
        self.group.require_same(u.group)
        out = self._lift_d1(project_to_d1(u))
        for kind in CENTRAL_KINDS:
            coeff = u.coefficient(_SYMBOLS[kind])
            if coeff:
                out = out + self.central_images[kind].scale(coeff)
        return out

    def central_image(self, kind: SymbolKind) -> AlgebraElement:
        return self.central_images[SymbolKind(kind)]

    def to_data(self) -> dict:
        return {
            "kind": self.kind,
            "center": {k.value: str(v) for k, v in self.central_images.items()},
        }


def _pullback(omega: BilinearForm, base: _CachedMap, kind: LiftKind) -> BilinearForm:
    if kind == "derivation":

        def beta(u: AlgebraElement, v: AlgebraElement) -> Scalar:
            return omega(base(u), v) + omega(u, base(v))

    else:

        def beta(u: AlgebraElement, v: AlgebraElement) -> Scalar:
            return omega(base(u), base(v))

    return beta


def _residual(beta: BilinearForm, klass: CohomologyClass) -> BilinearForm:
    """β − (a·ψ₁ + b·ψ₂ + c·(ψ₃ − ψ₃′)), a coboundary when β is a cocycle."""
    combo = class_combination(klass)

    def form(u: AlgebraElement, v: AlgebraElement) -> Scalar:
        out = beta(u, v) - combo(u, v)
        if klass.c:
            out = out + klass.c * psi3_prime(u, v)
        return out

    return form


def lift_to_hv(
    base: LinearMap,
    group: GroupInstance,
    kind: LiftKind,
    *,
    verify_samples: int = DEFAULT_VERIFY_SAMPLES,
    seed: int = 0,
) -> LiftedMap:
    """Extend a derivation or automorphism of 𝒟₁ to ℒ via class extraction."""
    cached = _CachedMap(base, group)
    error = NotADerivationError if kind == "derivation" else NotAnAutomorphismError
    matrix: dict[SymbolKind, dict[SymbolKind, Scalar]] = {}
    corrections: dict[SymbolKind, RecoveredFunctional] = {}
    for j in CENTRAL_KINDS:
        beta = _pullback(CENTRAL_FORMS[j], cached, kind)
        if verify_samples:
            report = verify_cocycle(beta, group, samples=verify_samples, seed=seed)
            if not report.passed:
                raise error(
                    f"pullback of the {j.value} form is not a cocycle",
                    detail=report.witnesses,
                )
        klass = extract_class(beta, group)
        matrix[j] = _column(klass)
        corrections[j] = recover_boundary(_residual(beta, klass), group)
    central_images = {
        k: AlgebraElement.build(
            AlgebraTag.HV, group, [(_SYMBOLS[j], matrix[j][k]) for j in CENTRAL_KINDS]
        )
        for k in CENTRAL_KINDS
    }
    return LiftedMap(group, kind, cached, corrections, central_images)
