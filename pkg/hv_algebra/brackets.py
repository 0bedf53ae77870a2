"""Brackets and products on W, 𝒟, 𝒟₁ and ℒ."""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

from hv_algebra.elements import (
    C_I,
    C_L,
    C_LI,
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    D,
    I,
    L,
    retag,
)
from hv_algebra.errors import PowerCapError, TagError
from hv_algebra.groups import GroupElement, GroupInstance
from hv_algebra.scalars import ONE, ZERO, Scalar

DEFAULT_MAX_POWER = 16

SymbolProduct = Callable[
    [GroupInstance, BasisSymbol, BasisSymbol], Iterable[tuple[BasisSymbol, Scalar]]
]


def _bilinear(
    u: AlgebraElement, v: AlgebraElement, tag: AlgebraTag, rule: SymbolProduct
) -> AlgebraElement:
    g = u.group
    acc: dict[BasisSymbol, Scalar] = {}
    for s, a in u.terms.items():
        for t, b in v.terms.items():
            ab = a * b
            for sym, c in rule(g, s, t):
                acc[sym] = acc.get(sym, ZERO) + ab * c
    return AlgebraElement._canonical(tag, g, acc)


def _memoized(rule: SymbolProduct) -> SymbolProduct:
    @lru_cache(maxsize=1 << 16)
    def cached(g: GroupInstance, s: BasisSymbol, t: BasisSymbol):
        return tuple(rule(g, s, t))

    return cached


def _require(u: AlgebraElement, v: AlgebraElement, *tags: AlgebraTag) -> None:
    u.require_compatible(v)
    if u.tag not in tags:
        raise TagError(f"operation expects {'/'.join(t.value for t in tags)}, got {u.tag.value}")


@_memoized
def _witt_rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol):
    c = g.pairing(t.x - s.x)
    if c:
        yield L(s.x + t.x), c


def witt_bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """[tˣ∂, tʸ∂] = ∂(y − x) t^{x+y}∂."""
    _require(u, v, AlgebraTag.W)
    return _bilinear(u, v, AlgebraTag.W, _witt_rule)


@lru_cache(maxsize=1 << 16)
def _diffop_terms(
    g: GroupInstance, s: BasisSymbol, t: BasisSymbol, max_power: int
) -> tuple[tuple[BasisSymbol, Scalar], ...]:
    m, n = s.m, t.m
    if m + n > max_power:
        raise PowerCapError(f"∂-power {m + n} exceeds the cap {max_power}")
    dy = g.pairing(t.x)
    x = s.x + t.x
    out = []
    power = ONE
    for i in range(m + 1):
        if i:
            power = power * dy
        coeff = power * comb(m, i)
        if coeff:
            out.append((D(x, m + n - i), coeff))
    return tuple(out)


def _product_rule(max_power: int) -> SymbolProduct:
    return lambda g, s, t: _diffop_terms(g, s, t, max_power)


def diffop_product(
    u: AlgebraElement, v: AlgebraElement, *, max_power: int = DEFAULT_MAX_POWER
) -> AlgebraElement:
    """(tˣ∂ᵐ)(tʸ∂ⁿ) = t^{x+y} Σᵢ C(m, i) ∂(y)ⁱ ∂^{m+n−i}."""
    _require(u, v, AlgebraTag.D)
    return _bilinear(u, v, AlgebraTag.D, _product_rule(max_power))


def commutator(
    u: AlgebraElement, v: AlgebraElement, *, max_power: int = DEFAULT_MAX_POWER
) -> AlgebraElement:
    """uv − vu in 𝒟; 𝒟₁ inputs go through 𝒟 and the result comes back as 𝒟₁."""
    _require(u, v, AlgebraTag.D, AlgebraTag.D1)
    if u.tag is AlgebraTag.D:
        return diffop_product(u, v, max_power=max_power) - diffop_product(
            v, u, max_power=max_power
        )
    du, dv = retag(u, AlgebraTag.D), retag(v, AlgebraTag.D)
    out = diffop_product(du, dv, max_power=max_power) - diffop_product(dv, du, max_power=max_power)
    return retag(out, AlgebraTag.D1)


@_memoized
def _hv_rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol):
    if s.is_central or t.is_central:
        return
    x, y = s.x, t.x
    diagonal = (x + y).is_zero()
    if s.kind is SymbolKind.L and t.kind is SymbolKind.L:
        c = g.pairing(y - x)
        if c:
            yield L(x + y), c
        if diagonal:
            dx = g.pairing(x)
            yield C_L, (dx * dx * dx - dx) * Fraction(1, 12)
    elif s.kind is SymbolKind.I and t.kind is SymbolKind.I:
        if diagonal:
            yield C_I, g.pairing(y)
    elif s.kind is SymbolKind.L:
        yield I(x + y), g.pairing(y)
        if diagonal:
            dx = g.pairing(x)
            yield C_LI, dx * dx - dx
    else:
        for sym, c in _hv_rule(g, t, s):
            yield sym, -c


def hv_bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """The bracket of ℒ; the [L, I] central term is carried by C_LI."""
    _require(u, v, AlgebraTag.HV)
    return _bilinear(u, v, AlgebraTag.HV, _hv_rule)


def lie_bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Dispatch on the algebra tag."""
    if u.tag is AlgebraTag.W:
        return witt_bracket(u, v)
    if u.tag is AlgebraTag.HV:
        return hv_bracket(u, v)
    return commutator(u, v)


def grade_components(u: AlgebraElement) -> dict[GroupElement, AlgebraElement]:
    """Split by degree; central symbols sit in degree 0."""
    zero = u.group.zero()
    parts: dict[GroupElement, dict[BasisSymbol, Scalar]] = {}
    for sym, coeff in u.terms.items():
        degree = zero if sym.is_central else sym.x
        parts.setdefault(degree, {})[sym] = coeff
    return {
        degree: AlgebraElement._canonical(u.tag, u.group, terms)
        for degree, terms in sorted(parts.items(), key=lambda kv: kv[0].coords)
    }


def project_to_d1(u: AlgebraElement) -> AlgebraElement:
    """ℒ → 𝒟₁: kill the center, L(x) ↦ tˣ∂, I(x) ↦ tˣ."""
    if u.tag is not AlgebraTag.HV:
        raise TagError(f"project_to_d1 expects HV, got {u.tag.value}")
    kept = {sym: c for sym, c in u.terms.items() if not sym.is_central}
    return AlgebraElement._canonical(AlgebraTag.D1, u.group, kept)


def jacobi_defect(
    u: AlgebraElement,
    v: AlgebraElement,
    w: AlgebraElement,
    bracket: AlgebraTag | None = None,
) -> AlgebraElement:
    """[[u,v],w] + [[v,w],u] + [[w,u],v]."""
    u.require_compatible(v)
    v.require_compatible(w)
    if bracket is not None and AlgebraTag(bracket) is not u.tag:
        raise TagError(f"bracket {AlgebraTag(bracket).value} does not match {u.tag.value}")
    return (
        lie_bracket(lie_bracket(u, v), w)
        + lie_bracket(lie_bracket(v, w), u)
        + lie_bracket(lie_bracket(w, u), v)
    )
