"""Sparse elements of W, 𝒟, 𝒟₁ and ℒ over a grading group."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from hv_algebra.errors import TagError
from hv_algebra.groups import GroupElement, GroupInstance
from hv_algebra.scalars import ONE, ZERO, Scalar, ScalarLike


class AlgebraTag(str, Enum):
    W = "W"
    D = "D"
    D1 = "D1"
    HV = "HV"


class SymbolKind(str, Enum):
    C_L = "C_L"
    C_I = "C_I"
    C_LI = "C_LI"
    I = "I"  # noqa: E741
    L = "L"
    D = "D"


CENTRAL_KINDS = (SymbolKind.C_L, SymbolKind.C_I, SymbolKind.C_LI)

_ADMISSIBLE = {
    AlgebraTag.W: {SymbolKind.L},
    AlgebraTag.D: {SymbolKind.D},
    AlgebraTag.D1: {SymbolKind.L, SymbolKind.I},
    AlgebraTag.HV: {SymbolKind.L, SymbolKind.I, *CENTRAL_KINDS},
}


@dataclass(frozen=True, slots=True)
class BasisSymbol:
    """L(x) = tˣ∂, I(x) = tˣ, D(x, m) = tˣ∂ᵐ, or a central generator."""

    kind: SymbolKind
    x: GroupElement | None = None
    m: int = 0

    @property
    def is_central(self) -> bool:
        return self.kind in CENTRAL_KINDS

    def sort_key(self) -> tuple:
        if self.is_central:
            return (0, CENTRAL_KINDS.index(self.kind))
        return (1, self.m, self.x.coords)

    def __str__(self) -> str:
        if self.is_central:
            return self.kind.value
        if self.kind is SymbolKind.D:
            return f"D({self.x};{self.m})"
        return f"{self.kind.value}({self.x})"


def L(x: GroupElement) -> BasisSymbol:
    return BasisSymbol(SymbolKind.L, x, 1)


def I(x: GroupElement) -> BasisSymbol:  # noqa: E743
    return BasisSymbol(SymbolKind.I, x, 0)


def D(x: GroupElement, m: int) -> BasisSymbol:
    if m < 0:
        raise TagError(f"∂-power must be nonnegative, got {m}")
    return BasisSymbol(SymbolKind.D, x, m)


C_L = BasisSymbol(SymbolKind.C_L)
C_I = BasisSymbol(SymbolKind.C_I)
C_LI = BasisSymbol(SymbolKind.C_LI)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A finite linear combination of basis symbols tagged by its algebra.

    ``terms`` never holds zero coefficients and is kept in canonical order:
    central symbols first (C_L < C_I < C_LI), then by (∂-power, coordinates).
    """

    tag: AlgebraTag
    group: GroupInstance
    terms: Mapping[BasisSymbol, Scalar] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        tag: AlgebraTag,
        group: GroupInstance,
        terms: Mapping[BasisSymbol, ScalarLike] | Iterable[tuple[BasisSymbol, ScalarLike]],
    ) -> "AlgebraElement":
        """Canonicalize: merge, drop zeros, check admissibility, sort."""
        tag = AlgebraTag(tag)
        allowed = _ADMISSIBLE[tag]
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[BasisSymbol, Scalar] = {}
        for sym, coeff in items:
            if sym.kind not in allowed:
                raise TagError(f"{sym} is not admissible in {tag.value}")
            if sym.x is not None:
                group.check(sym.x)
            merged[sym] = merged.get(sym, ZERO) + group.scalar(coeff)
        return cls._canonical(tag, group, merged)

    @classmethod
    def _canonical(
        cls, tag: AlgebraTag, group: GroupInstance, merged: dict[BasisSymbol, Scalar]
    ) -> "AlgebraElement":
        ordered = sorted((kv for kv in merged.items() if kv[1]), key=lambda kv: kv[0].sort_key())
        return cls(tag, group, dict(ordered))

    @classmethod
    def zero(cls, tag: AlgebraTag, group: GroupInstance) -> "AlgebraElement":
        return cls(AlgebraTag(tag), group, {})

    @classmethod
    def basis(
        cls, tag: AlgebraTag, group: GroupInstance, sym: BasisSymbol, coeff: ScalarLike = ONE
    ) -> "AlgebraElement":
        return cls.build(tag, group, [(sym, coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, sym: BasisSymbol) -> Scalar:
        return self.terms.get(sym, ZERO)

    def require_compatible(self, other: "AlgebraElement") -> None:
        if self.tag is not other.tag:
            raise TagError(f"tag mismatch: {self.tag.value} vs {other.tag.value}")
        self.group.require_same(other.group)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self.require_compatible(other)
        merged = dict(self.terms)
        for sym, coeff in other.terms.items():
            merged[sym] = merged.get(sym, ZERO) + coeff
        return AlgebraElement._canonical(self.tag, self.group, merged)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.tag, self.group, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, k: ScalarLike) -> "AlgebraElement":
        k = self.group.scalar(k)
        if not k:
            return AlgebraElement.zero(self.tag, self.group)
        return AlgebraElement(self.tag, self.group, {s: c * k for s, c in self.terms.items()})

    def __rmul__(self, k: ScalarLike) -> "AlgebraElement":
        return self.scale(k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.tag is other.tag
            and self.group == other.group
            and list(self.terms.items()) == list(other.terms.items())
        )

    def __hash__(self) -> int:
        return hash((self.tag, tuple(self.terms.items())))

    def __str__(self) -> str:
        from hv_algebra.parser import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.tag.value}, {str(self)!r})"


def retag(u: AlgebraElement, tag: AlgebraTag) -> AlgebraElement:
    """Move an element between W, 𝒟₁, 𝒟 and ℒ along the standard identifications.

    L(x) ≡ D(x, 1) and I(x) ≡ D(x, 0); central symbols only survive into ℒ.
    Conversions that would lose a term raise ``TagError``.
    """
    tag = AlgebraTag(tag)
    if tag is u.tag:
        return u
    out: dict[BasisSymbol, Scalar] = {}
    for sym, coeff in u.terms.items():
        out[_convert_symbol(sym, tag)] = coeff
    return AlgebraElement._canonical(tag, u.group, out)


def _convert_symbol(sym: BasisSymbol, tag: AlgebraTag) -> BasisSymbol:
    if tag is AlgebraTag.D:
        if sym.is_central:
            raise TagError(f"{sym} has no image in D")
        return D(sym.x, sym.m)
    if sym.is_central:
        if tag is AlgebraTag.HV:
            return sym
        raise TagError(f"{sym} has no image in {tag.value}")
    if sym.m == 1 and sym.kind in (SymbolKind.L, SymbolKind.D):
        return L(sym.x)
    if sym.m == 0 and sym.kind in (SymbolKind.I, SymbolKind.D) and tag is not AlgebraTag.W:
        return I(sym.x)
    raise TagError(f"{sym} has no image in {tag.value}")


def probe_symbols(group: GroupInstance) -> list[BasisSymbol]:
    """L(y) and I(y) for y in the group's probe points."""
    return [sym for y in group.probe_points() for sym in (L(y), I(y))]
