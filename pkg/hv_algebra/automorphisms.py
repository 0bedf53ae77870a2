"""Automorphisms of 𝒟₁: the θ(χ, ε, a, b, c) family, inner automorphisms
exp(k·ad tᶻ), words η∘θ, factorization and the group laws of the θ family.
"""

from dataclasses import dataclass, field
from typing import Callable, Mapping

from hv_algebra.brackets import lie_bracket
from hv_algebra.elements import (
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    I,
    L,
    probe_symbols,
)
from hv_algebra.errors import EpsilonError, HVError, NotAnAutomorphismError, TagError
from hv_algebra.groups import Character, GroupElement, GroupInstance, GroupKind, epsilon_in_E
from hv_algebra.lifting import DEFAULT_VERIFY_SAMPLES, LiftedMap, lift_to_hv
from hv_algebra.sampling import Sampler
from hv_algebra.scalars import ONE, ZERO, Scalar, ScalarLike

LinearMap = Callable[[AlgebraElement], AlgebraElement]


def _linear(
    group: GroupInstance, on_symbol: Callable[[BasisSymbol], AlgebraElement], u: AlgebraElement
) -> AlgebraElement:
    if u.tag is not AlgebraTag.D1:
        raise TagError(f"automorphisms act on D1, got {u.tag.value}")
    group.require_same(u.group)
    acc: dict[BasisSymbol, Scalar] = {}
    for sym, coeff in u.terms.items():
        for out, value in on_symbol(sym).terms.items():
            acc[out] = acc.get(out, ZERO) + coeff * value
    return AlgebraElement._canonical(AlgebraTag.D1, group, acc)


@dataclass(frozen=True)
class ThetaAut:
    """θ(tˣ∂) = ε⁻¹χ(x)t^{εx}∂ + (b∂(x) + a)χ(x)t^{εx},  θ(tʸ) = cχ(y)t^{εy}."""

    chi: Character
    eps: Scalar
    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        g = self.chi.group
        for name in ("eps", "a", "b", "c"):
            object.__setattr__(self, name, g.scalar(getattr(self, name)))
        if not epsilon_in_E(g, self.eps):
            raise EpsilonError(
                f"ε = {self.eps} is not in ℰ for {g.kind.value}", detail={"eps": str(self.eps)}
            )
        if not self.c:
            raise NotAnAutomorphismError("c must be nonzero")

    @property
    def group(self) -> GroupInstance:
        return self.chi.group

    @classmethod
    def identity(cls, group: GroupInstance) -> "ThetaAut":
        return cls(Character.trivial(group), ONE, ZERO, ZERO, ONE)

    @classmethod
    def build(
        cls,
        group: GroupInstance,
        chi: list[ScalarLike | str] | None = None,
        eps: ScalarLike | str = 1,
        a: ScalarLike | str = 0,
        b: ScalarLike | str = 0,
        c: ScalarLike | str = 1,
    ) -> "ThetaAut":
        character = (
            Character.trivial(group) if chi is None else Character(group, tuple(chi))
        )
        return cls(character, group.scalar(eps), group.scalar(a), group.scalar(b), group.scalar(c))

    def on_symbol(self, sym: BasisSymbol) -> AlgebraElement:
        g = self.group
        x = sym.x
        ex = x.scale(self.eps.to_fraction())
        chi = self.chi(x)
        if sym.kind is SymbolKind.I:
            terms = [(I(ex), self.c * chi)]
        else:
            terms = [
                (L(ex), self.eps.inverse() * chi),
                (I(ex), (self.b * g.pairing(x) + self.a) * chi),
            ]
        return AlgebraElement.build(AlgebraTag.D1, g, terms)

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return apply_theta(self, u)

    def compose(self, other: "ThetaAut") -> "ThetaAut":
        return compose_theta(self, other)

    def inverse(self) -> "ThetaAut":
        return invert_theta(self)

    def is_identity(self) -> bool:
        return (
            self.chi.is_trivial and self.eps == 1 and not self.a and not self.b and self.c == 1
        )

    def to_data(self) -> dict:
        return {
            "chi": [str(v) for v in self.chi.generator_images],
            "eps": str(self.eps),
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
        }


def apply_theta(theta: ThetaAut, u: AlgebraElement) -> AlgebraElement:
    return _linear(theta.group, theta.on_symbol, u)


def compose_theta(t1: ThetaAut, t2: ThetaAut) -> ThetaAut:
    """θ₁∘θ₂ as parameters.

    θ((χ₁∘ε₂)χ₂, ε₁ε₂, ε₂⁻¹a₁ + c₁a₂, b₁ + c₁b₂, c₁c₂)
    """
    t1.group.require_same(t2.group)
    return ThetaAut(
        t1.chi.precompose(t2.eps) * t2.chi,
        t1.eps * t2.eps,
        t2.eps.inverse() * t1.a + t1.c * t2.a,
        t1.b + t1.c * t2.b,
        t1.c * t2.c,
    )


def invert_theta(theta: ThetaAut) -> ThetaAut:
    """θ⁻¹ = θ(χ⁻¹∘ε⁻¹, ε⁻¹, −εac⁻¹, −bc⁻¹, c⁻¹)."""
    eps_inv = theta.eps.inverse()
    c_inv = theta.c.inverse()
    return ThetaAut(
        theta.chi.inverse().precompose(eps_inv),
        eps_inv,
        -(theta.eps * theta.a * c_inv),
        -(theta.b * c_inv),
        c_inv,
    )


@dataclass(frozen=True)
class InnerAut:
    """exp(k₁·ad t^{z₁}) ⋯ exp(kₙ·ad t^{zₙ}); the factors commute on 𝒟₁."""

    group: GroupInstance
    factors: tuple[tuple[Scalar, GroupElement], ...] = ()

    def __post_init__(self) -> None:
        cleaned = []
        for k, z in self.factors:
            self.group.check(z)
            if z.is_zero():
                raise HVError("inner factors need z ≠ 0")
            cleaned.append((self.group.scalar(k), z))
        object.__setattr__(self, "factors", tuple(cleaned))

    @classmethod
    def identity(cls, group: GroupInstance) -> "InnerAut":
        return cls(group)

    def on_symbol(self, sym: BasisSymbol) -> AlgebraElement:
        terms = [(sym, ONE)]
        if sym.kind is SymbolKind.L:
            for k, z in self.factors:
                terms.append((I(sym.x + z), -(k * self.group.pairing(z))))
        return AlgebraElement.build(AlgebraTag.D1, self.group, terms)

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return apply_inner(self, u)

    def inverse(self) -> "InnerAut":
        return InnerAut(self.group, tuple((-k, z) for k, z in reversed(self.factors)))

    def compose(self, other: "InnerAut") -> "InnerAut":
        self.group.require_same(other.group)
        return InnerAut(self.group, other.factors + self.factors)

    def conjugate_by(self, theta: ThetaAut) -> "InnerAut":
        """θ∘η∘θ⁻¹, using θ exp(k ad tᶻ) θ⁻¹ = exp(k·cχ(z)·ad t^{εz})."""
        eps = theta.eps.to_fraction()
        return InnerAut(
            self.group,
            tuple((k * theta.c * theta.chi(z), z.scale(eps)) for k, z in self.factors),
        )

    def to_data(self) -> dict:
        return {"factors": [[str(k), str(z)] for k, z in self.factors]}


def apply_inner(eta: InnerAut, u: AlgebraElement) -> AlgebraElement:
    return _linear(eta.group, eta.on_symbol, u)


@dataclass(frozen=True)
class AutWord:
    """π = η∘θ, the normal form of Aut(𝒟₁) = 𝔯 ⋊ 𝔞𝔲𝔱(𝒟₁)."""

    inner: InnerAut
    theta: ThetaAut

    def __post_init__(self) -> None:
        self.inner.group.require_same(self.theta.group)

    @property
    def group(self) -> GroupInstance:
        return self.theta.group

    @classmethod
    def identity(cls, group: GroupInstance) -> "AutWord":
        return cls(InnerAut.identity(group), ThetaAut.identity(group))

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return apply_inner(self.inner, apply_theta(self.theta, u))

    def compose(self, other: "AutWord") -> "AutWord":
        """(η₁θ₁)(η₂θ₂) = η₁·(θ₁η₂θ₁⁻¹)·θ₁θ₂."""
        moved = other.inner.conjugate_by(self.theta)
        return AutWord(moved.compose(self.inner), compose_theta(self.theta, other.theta))

    def inverse(self) -> "AutWord":
        theta_inv = invert_theta(self.theta)
        return AutWord(self.inner.inverse().conjugate_by(theta_inv), theta_inv)

    def to_data(self) -> dict:
        return {"inner": self.inner.to_data(), "theta": self.theta.to_data()}


def homomorphism_defect(pi: LinearMap, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """π([u, v]) − [π(u), π(v)]; also valid for lifted maps on ℒ."""
    return pi(lie_bracket(u, v)) - lie_bracket(pi(u), pi(v))


ProbeImages = Mapping[BasisSymbol, AlgebraElement]


def probe_images(pi: LinearMap, group: GroupInstance) -> dict[BasisSymbol, AlgebraElement]:
    return {
        sym: pi(AlgebraElement.basis(AlgebraTag.D1, group, sym)) for sym in probe_symbols(group)
    }


def _witness(message: str, **data: object) -> NotAnAutomorphismError:
    return NotAnAutomorphismError(message, detail={k: str(v) for k, v in data.items()})


def factor_automorphism(pi: LinearMap | ProbeImages, group: GroupInstance) -> AutWord:
    """Split π = η∘θ from its images on L(x), I(x) over the probe points.

    ε comes from the ∂-coefficient of π(∂); the tᶻ-tail of π(∂) fixes η;
    θ = η⁻¹∘π is then read off at the generators and checked on every probe.
    """
    images = dict(pi) if isinstance(pi, Mapping) else probe_images(pi, group)
    missing = [str(s) for s in probe_symbols(group) if s not in images]
    if missing:
        raise HVError("missing probe images", detail={"missing": missing})
    zero = group.zero()
    p0 = images[L(zero)]
    for sym in p0.terms:
        if sym.kind is SymbolKind.L and not sym.x.is_zero():
            raise _witness(
                f"π(∂) has a {sym} term; t^z∂ tails with z ≠ 0 cannot occur",
                generator=L(zero),
                image=p0,
            )
    lam0 = p0.coefficient(L(zero))
    if not lam0:
        raise _witness("π(∂) has no ∂ term", generator=L(zero), image=p0)
    eps = lam0.inverse()
    if not eps.is_rational or not epsilon_in_E(group, eps):
        raise EpsilonError(
            f"ε = {eps} is not in ℰ for {group.kind.value}", detail={"eps": str(eps)}
        )

    a = p0.coefficient(I(zero))
    factors = []
    for sym, gamma in p0.terms.items():
        if sym.kind is SymbolKind.I and not sym.x.is_zero():
            factors.append((-(eps * gamma) / group.pairing(sym.x), sym.x))
    eta = InnerAut(group, tuple(factors))
    eta_inv = eta.inverse()

    def theta_image(sym: BasisSymbol) -> AlgebraElement:
        return apply_inner(eta_inv, images[sym])

    step = eps.to_fraction()
    if group.kind is GroupKind.Q:
        chi = Character.trivial(group)
    else:
        chi = Character(
            group,
            tuple(
                eps * theta_image(L(e)).coefficient(L(e.scale(step)))
                for e in group.generators()
            ),
        )
    c = theta_image(I(zero)).coefficient(I(zero))
    x0 = group.base_point()

    def f(x: GroupElement) -> Scalar:
        return theta_image(L(x)).coefficient(I(x.scale(step))) / chi(x)

    b = (f(2 * x0) - f(x0)) / group.pairing(x0)
    try:
        theta = ThetaAut(chi, eps, a, b, c)
    except NotAnAutomorphismError as exc:
        raise _witness(str(exc), generator=I(zero), image=images[I(zero)]) from exc

    word = AutWord(eta, theta)
    for sym in probe_symbols(group):
        expected = word(AlgebraElement.basis(AlgebraTag.D1, group, sym))
        if expected != images[sym]:
            raise _witness(
                f"π({sym}) does not match η∘θ",
                generator=sym,
                expected=expected,
                actual=images[sym],
            )
    if not isinstance(pi, Mapping):
        elements = [AlgebraElement.basis(AlgebraTag.D1, group, s) for s in probe_symbols(group)]
        for u in elements:
            for v in elements:
                defect = homomorphism_defect(pi, u, v)
                if not defect.is_zero():
                    raise _witness("π is not a homomorphism on probes", u=u, v=v, defect=defect)
    return word


def lift_automorphism_to_hv(
    pi: ThetaAut | InnerAut | AutWord | LinearMap,
    group: GroupInstance | None = None,
    *,
    verify_samples: int = DEFAULT_VERIFY_SAMPLES,
    seed: int = 0,
) -> LiftedMap:
    """The unique extension of an automorphism of 𝒟₁ to ℒ."""
    if group is None:
        group = pi.group
    return lift_to_hv(pi, group, "automorphism", verify_samples=verify_samples, seed=seed)


def random_theta(sampler: Sampler) -> ThetaAut:
    return ThetaAut(
        sampler.character(),
        sampler.epsilon(),
        sampler.scalar(),
        sampler.scalar(),
        sampler.scalar(nonzero=True),
    )


def random_inner(sampler: Sampler, max_factors: int = 3) -> InnerAut:
    factors = tuple(
        (sampler.coefficient(), sampler.group_element(nonzero=True))
        for _ in range(sampler.integer(0, max_factors))
    )
    return InnerAut(sampler.group, factors)


@dataclass
class LawCheck:
    name: str
    passed: bool = True
    samples: int = 0
    witness: dict | None = None

    def fail(self, **data: object) -> None:
        if self.passed:
            self.witness = {k: v if isinstance(v, dict) else str(v) for k, v in data.items()}
        self.passed = False


@dataclass
class GroupLawReport:
    seed: int
    checks: list[LawCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_data(self) -> dict:
        return {
            "passed": self.passed,
            "seed": self.seed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "samples": c.samples,
                    "witness": c.witness,
                }
                for c in self.checks
            ],
        }


def _slice(
    sampler: Sampler,
    *,
    chi: bool = False,
    eps: bool = False,
    ab: bool = False,
    c: bool = False,
) -> ThetaAut:
    g = sampler.group
    return ThetaAut(
        sampler.character() if chi else Character.trivial(g),
        sampler.epsilon() if eps else ONE,
        sampler.scalar() if ab else ZERO,
        sampler.scalar() if ab else ZERO,
        sampler.scalar(nonzero=True) if c else ONE,
    )


def verify_group_laws(
    group: GroupInstance, *, samples: int = 200, seed: int = 0
) -> GroupLawReport:
    """Subgroup, normality and projection laws of the θ family on sampled parameters."""
    report = GroupLawReport(seed=seed)
    n_slice = LawCheck("N_closed")
    a_slice = LawCheck("a_abelian")
    c_slice = LawCheck("c_multiplicative")
    normal = LawCheck("Nac_normal")
    projection = LawCheck("eps_projection")
    report.checks = [n_slice, a_slice, c_slice, normal, projection]
    sampler = Sampler(group, seed)
    identity = ThetaAut.identity(group)

    for _ in range(samples):
        t1, t2 = _slice(sampler, chi=True), _slice(sampler, chi=True)
        out = compose_theta(t1, t2)
        n_slice.samples += 1
        if out != ThetaAut(t1.chi * t2.chi, ONE, ZERO, ZERO, ONE):
            n_slice.fail(lhs=t1.to_data(), rhs=t2.to_data(), result=out.to_data())

        t1, t2 = _slice(sampler, ab=True), _slice(sampler, ab=True)
        a_slice.samples += 1
        expected = ThetaAut(Character.trivial(group), ONE, t1.a + t2.a, t1.b + t2.b, ONE)
        if (
            compose_theta(t1, t2) != expected
            or compose_theta(t2, t1) != expected
            or compose_theta(t1, invert_theta(t1)) != identity
        ):
            a_slice.fail(lhs=t1.to_data(), rhs=t2.to_data())

        t1, t2 = _slice(sampler, c=True), _slice(sampler, c=True)
        c_slice.samples += 1
        expected = ThetaAut(Character.trivial(group), ONE, ZERO, ZERO, t1.c * t2.c)
        if compose_theta(t1, t2) != expected:
            c_slice.fail(lhs=t1.to_data(), rhs=t2.to_data())

        rho = _slice(sampler, chi=True, ab=True, c=True)
        nu = _slice(sampler, eps=True)
        conj = compose_theta(compose_theta(nu, rho), invert_theta(nu))
        # ν = θ(1, ε, 0, 0, 1)
        # ν θ(χ, 1, a, b, c) ν⁻¹ = θ(χ∘ε⁻¹, 1, εa, b, c)
        expected = ThetaAut(
            rho.chi.precompose(nu.eps.inverse()), ONE, nu.eps * rho.a, rho.b, rho.c
        )
        normal.samples += 1
        if conj != expected:
            normal.fail(element=rho.to_data(), conjugator=nu.to_data(), result=conj.to_data())

        t1, t2 = random_theta(sampler), random_theta(sampler)
        projection.samples += 1
        if compose_theta(t1, t2).eps != t1.eps * t2.eps:
            projection.fail(lhs=t1.to_data(), rhs=t2.to_data())
    return report
