"""Derivations of 𝒟₁: inner, σ₁, σ₂, σ₃, ξ_μ and probe-level degree-0 families."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Union

from hv_algebra.brackets import commutator, lie_bracket
from hv_algebra.elements import (
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    I,
    L,
    probe_symbols,
)
from hv_algebra.errors import (
    NotADerivationError,
    TagError,
    UnboundedSupportError,
)
from hv_algebra.groups import AdditiveMap, GroupElement, GroupInstance
from hv_algebra.lifting import DEFAULT_VERIFY_SAMPLES, LiftedMap, lift_to_hv
from hv_algebra.scalars import ONE, ZERO, Scalar, ScalarLike

CoefficientFn = Callable[[GroupElement], ScalarLike]
LinearMap = Callable[[AlgebraElement], AlgebraElement]

DEFAULT_MAX_SUPPORT = 256


@dataclass(frozen=True)
class Inner:
    w: AlgebraElement

    def describe(self) -> str:
        return f"ad({self.w})"


@dataclass(frozen=True)
class Sigma:
    index: int

    def __post_init__(self) -> None:
        if self.index not in (1, 2, 3):
            raise TagError(f"sigma index must be 1, 2 or 3, got {self.index}")

    def describe(self) -> str:
        return f"sigma{self.index}"


@dataclass(frozen=True)
class Xi:
    mu: AdditiveMap

    def describe(self) -> str:
        return f"xi[{','.join(str(v) for v in self.mu.generator_images)}]"


@dataclass(frozen=True, eq=False)
class Generic0:
    """D(I(x)) = β_x I(x), D(L(x)) = γ_x L(x) + λ_x I(x)."""

    beta: CoefficientFn
    gamma: CoefficientFn
    lam: CoefficientFn

    def describe(self) -> str:
        return "generic0"


DerivationTerm = Union[Inner, Sigma, Xi, Generic0]


def _term_action(
    g: GroupInstance, term: DerivationTerm, sym: BasisSymbol
) -> Iterable[tuple[BasisSymbol, Scalar]]:
    x = sym.x
    if isinstance(term, Inner):
        yield from commutator(term.w, AlgebraElement.basis(AlgebraTag.D1, g, sym)).terms.items()
    elif isinstance(term, Sigma):
        if term.index == 1 and sym.kind is SymbolKind.L:
            yield I(x), g.pairing(x)
        elif term.index == 2 and sym.kind is SymbolKind.L:
            yield I(x), ONE
        elif term.index == 3 and sym.kind is SymbolKind.I:
            yield I(x), ONE
    elif isinstance(term, Xi):
        yield sym, term.mu(x)
    elif sym.kind is SymbolKind.I:
        yield I(x), g.scalar(term.beta(x))
    else:
        yield L(x), g.scalar(term.gamma(x))
        yield I(x), g.scalar(term.lam(x))


@dataclass(frozen=True)
class Derivation:
    """A finite linear combination of derivation families acting on 𝒟₁."""

    group: GroupInstance
    terms: tuple[tuple[Scalar, DerivationTerm], ...] = ()

    @classmethod
    def zero(cls, group: GroupInstance) -> "Derivation":
        return cls(group)

    @classmethod
    def inner(cls, w: AlgebraElement) -> "Derivation":
        if w.tag is not AlgebraTag.D1:
            raise TagError(f"inner derivations take a D1 element, got {w.tag.value}")
        return cls(w.group, ((ONE, Inner(w)),))

    @classmethod
    def sigma(cls, group: GroupInstance, index: int) -> "Derivation":
        return cls(group, ((ONE, Sigma(index)),))

    @classmethod
    def xi(cls, mu: AdditiveMap) -> "Derivation":
        return cls(mu.group, ((ONE, Xi(mu)),))

    @classmethod
    def generic0(
        cls,
        group: GroupInstance,
        beta: CoefficientFn,
        gamma: CoefficientFn,
        lam: CoefficientFn,
    ) -> "Derivation":
        return cls(group, ((ONE, Generic0(beta, gamma, lam)),))

    @classmethod
    def from_parameters(
        cls, mu: AdditiveMap, a: ScalarLike, b: ScalarLike, c0: ScalarLike
    ) -> "Derivation":
        """ξ_μ + a·σ₁ + b·σ₂ + c₀·σ₃."""
        g = mu.group
        return (
            cls.xi(mu)
            + cls.sigma(g, 1).scale(a)
            + cls.sigma(g, 2).scale(b)
            + cls.sigma(g, 3).scale(c0)
        )

    def __add__(self, other: "Derivation") -> "Derivation":
        self.group.require_same(other.group)
        return Derivation(self.group, self.terms + other.terms)

    def scale(self, k: ScalarLike) -> "Derivation":
        k = self.group.scalar(k)
        if not k:
            return Derivation.zero(self.group)
        return Derivation(self.group, tuple((c * k, t) for c, t in self.terms))

    def __rmul__(self, k: ScalarLike) -> "Derivation":
        return self.scale(k)

    def __neg__(self) -> "Derivation":
        return self.scale(-1)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def on_symbol(self, sym: BasisSymbol) -> AlgebraElement:
        return _on_symbol(self, sym)

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return derive(self, u)

    def describe(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            t.describe() if c == ONE else f"{c}*{t.describe()}" for c, t in self.terms
        )


@lru_cache(maxsize=1 << 14)
def _on_symbol(d: Derivation, sym: BasisSymbol) -> AlgebraElement:
    acc: dict[BasisSymbol, Scalar] = {}
    for coeff, term in d.terms:
        for out, value in _term_action(d.group, term, sym):
            acc[out] = acc.get(out, ZERO) + coeff * value
    return AlgebraElement._canonical(AlgebraTag.D1, d.group, acc)


def derive(d: Derivation, u: AlgebraElement) -> AlgebraElement:
    """Apply D by linear extension of its action on L(x) and I(x)."""
    if u.tag is not AlgebraTag.D1:
        raise TagError(f"derivations act on D1, got {u.tag.value}")
    d.group.require_same(u.group)
    acc: dict[BasisSymbol, Scalar] = {}
    for sym, coeff in u.terms.items():
        for out, value in d.on_symbol(sym).terms.items():
            acc[out] = acc.get(out, ZERO) + coeff * value
    return AlgebraElement._canonical(AlgebraTag.D1, u.group, acc)


def leibniz_defect(d: LinearMap, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """D[u,v] − [Du, v] − [u, Dv]; works on 𝒟₁ and, for lifted maps, on ℒ."""
    return d(lie_bracket(u, v)) - lie_bracket(d(u), v) - lie_bracket(u, d(v))


def degree_components(
    d: LinearMap,
    group: GroupInstance,
    probes: list[BasisSymbol] | None = None,
    *,
    max_support: int = DEFAULT_MAX_SUPPORT,
) -> dict[GroupElement, dict[BasisSymbol, AlgebraElement]]:
    """Split D on each probe generator by the degree shift of its output."""
    probes = probe_symbols(group) if probes is None else probes
    components: dict[GroupElement, dict[BasisSymbol, dict[BasisSymbol, Scalar]]] = {}
    for sym in probes:
        image = d(AlgebraElement.basis(AlgebraTag.D1, group, sym))
        if len(image.terms) > max_support:
            raise UnboundedSupportError(
                f"D({sym}) has {len(image.terms)} terms, above the cap {max_support}",
                detail={"generator": str(sym), "terms": len(image.terms)},
            )
        for out, coeff in image.terms.items():
            shift = out.x - sym.x
            components.setdefault(shift, {}).setdefault(sym, {})[out] = coeff
    return {
        shift: {
            sym: AlgebraElement._canonical(AlgebraTag.D1, group, terms)
            for sym, terms in parts.items()
        }
        for shift, parts in sorted(components.items(), key=lambda kv: kv[0].coords)
    }


@dataclass(frozen=True)
class Degree0Decomposition:
    """D = ξ_μ + a·σ₁ + b·σ₂ + c₀·σ₃."""

    mu: AdditiveMap
    a: Scalar
    b: Scalar
    c0: Scalar

    def rebuild(self) -> Derivation:
        return Derivation.from_parameters(self.mu, self.a, self.b, self.c0)

    def to_data(self) -> dict:
        return {
            "mu": [str(v) for v in self.mu.generator_images],
            "a": str(self.a),
            "b": str(self.b),
            "c0": str(self.c0),
        }


def _not_a_derivation(message: str, **witness: object) -> NotADerivationError:
    return NotADerivationError(message, detail={k: str(v) for k, v in witness.items()})


def decompose_degree0(
    d: LinearMap, group: GroupInstance, probes: list[BasisSymbol] | None = None
) -> Degree0Decomposition:
    """Recover (μ, a, b, c₀) from D's action on probe generators.

    μ is read at the generators, c₀ at I(0), and (a, b) from λ_x = a∂(x) + b
    at x₀ and 2x₀. Every probe is then checked against the reconstruction
    and the Leibniz rule; any mismatch raises with a witness.
    """
    probes = probe_symbols(group) if probes is None else probes

    def image(sym: BasisSymbol) -> AlgebraElement:
        return d(AlgebraElement.basis(AlgebraTag.D1, group, sym))

    zero = group.zero()
    c0 = image(I(zero)).coefficient(I(zero))
    mu = AdditiveMap(group, tuple(image(L(e)).coefficient(L(e)) for e in group.generators()))
    x0 = group.base_point()
    delta = group.pairing(x0)
    lam1 = image(L(x0)).coefficient(I(x0))
    lam2 = image(L(2 * x0)).coefficient(I(2 * x0))
    a = (lam2 - lam1) / delta
    b = lam1 * 2 - lam2
    result = Degree0Decomposition(mu, a, b, c0)

    rebuilt = result.rebuild()
    for sym in probes:
        expected, actual = rebuilt.on_symbol(sym), image(sym)
        if expected != actual:
            raise _not_a_derivation(
                f"D({sym}) is not of the form ξ_μ + aσ₁ + bσ₂ + c₀σ₃",
                generator=sym,
                expected=expected,
                actual=actual,
            )
    elements = [AlgebraElement.basis(AlgebraTag.D1, group, sym) for sym in probes]
    for u in elements:
        for v in elements:
            defect = leibniz_defect(d, u, v)
            if not defect.is_zero():
                raise _not_a_derivation(
                    "Leibniz rule fails on probes", u=u, v=v, defect=defect
                )
    return result


def lift_derivation_to_hv(
    d: Derivation | LinearMap,
    group: GroupInstance | None = None,
    *,
    verify_samples: int = DEFAULT_VERIFY_SAMPLES,
    seed: int = 0,
) -> LiftedMap:
    """The lift of a derivation of 𝒟₁ to ℒ; central images come from class extraction."""
    if group is None:
        group = d.group
    return lift_to_hv(d, group, "derivation", verify_samples=verify_samples, seed=seed)
