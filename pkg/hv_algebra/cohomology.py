"""2-cocycles on 𝒟₁ and W: canonical cocycles, coboundaries, verification,
class extraction, boundary recovery and the functional-equation oracles.

A bilinear form is any callable ``(u, v) -> Scalar`` on 𝒟₁ elements. The
canonical ones are built from symbol rules and extended bilinearly; opaque
forms (pullbacks along morphisms, user callbacks) are only ever probed.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from hv_algebra import linalg
from hv_algebra.brackets import commutator, lie_bracket
from hv_algebra.elements import (
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    I,
    L,
    retag,
)
from hv_algebra.errors import DegeneratePairingError, HVError, TagError
from hv_algebra.groups import GroupElement, GroupInstance
from hv_algebra.sampling import Sampler
from hv_algebra.scalars import ZERO, Scalar, ScalarLike, as_scalar

BilinearForm = Callable[[AlgebraElement, AlgebraElement], Scalar]
SymbolPairing = Callable[[GroupInstance, BasisSymbol, BasisSymbol], Scalar]


def bilinear_form(rule: SymbolPairing) -> BilinearForm:
    """Extend a rule on basis symbols bilinearly to W / 𝒟₁ elements."""

    def form(u: AlgebraElement, v: AlgebraElement) -> Scalar:
        u.require_compatible(v)
        if u.tag not in (AlgebraTag.W, AlgebraTag.D1):
            raise TagError(f"cocycles live on W or D1, got {u.tag.value}")
        g = u.group
        total = ZERO
        for s, a in u.terms.items():
            for t, b in v.terms.items():
                c = rule(g, s, t)
                if c:
                    total = total + a * b * c
        return g.scalar(total)

    return form


def _diagonal(s: BasisSymbol, t: BasisSymbol) -> bool:
    return (s.x + t.x).is_zero()


def _psi1_rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol) -> Scalar:
    if s.kind is SymbolKind.I and t.kind is SymbolKind.I and _diagonal(s, t):
        return g.pairing(t.x)
    return ZERO


def _psi2_rule(degree: int) -> SymbolPairing:
    def rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol) -> Scalar:
        if s.kind is SymbolKind.L and t.kind is SymbolKind.L and _diagonal(s, t):
            dx = g.pairing(s.x)
            return dx**degree - dx
        return ZERO

    return rule


def _mixed_rule(power: int) -> SymbolPairing:
    """δ_{x+y,0}∂(x)^power on (L(x), I(y)), extended antisymmetrically."""

    def rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol) -> Scalar:
        if not _diagonal(s, t):
            return ZERO
        if s.kind is SymbolKind.L and t.kind is SymbolKind.I:
            return g.pairing(s.x) ** power
        if s.kind is SymbolKind.I and t.kind is SymbolKind.L:
            return -(g.pairing(t.x) ** power)
        return ZERO

    return rule


def _witt_rule(g: GroupInstance, s: BasisSymbol, t: BasisSymbol) -> Scalar:
    if s.kind is SymbolKind.L and t.kind is SymbolKind.L and _diagonal(s, t):
        return g.pairing(s.x) ** 3
    return ZERO


psi1 = bilinear_form(_psi1_rule)
psi2 = bilinear_form(_psi2_rule(3))
psi3 = bilinear_form(_mixed_rule(2))
psi3_prime = bilinear_form(_mixed_rule(1))
witt_cocycle = bilinear_form(_witt_rule)


def psi2_form(degree: int = 3) -> BilinearForm:
    """ψ₂ with the cube replaced by ``degree``; only degree 3 is a cocycle."""
    return bilinear_form(_psi2_rule(degree))


def canonical_cocycles(psi2_degree: int = 3) -> dict[str, BilinearForm]:
    return {
        "psi": witt_cocycle,
        "psi1": psi1,
        "psi2": psi2_form(psi2_degree),
        "psi3": psi3,
        "psi3_prime": psi3_prime,
    }


def _central_lli(u: AlgebraElement, v: AlgebraElement) -> Scalar:
    return psi3(u, v) - psi3_prime(u, v)


def _central_ll(u: AlgebraElement, v: AlgebraElement) -> Scalar:
    return psi2(u, v) * Fraction(1, 12)


CENTRAL_FORMS: dict[SymbolKind, BilinearForm] = {
    SymbolKind.C_L: _central_ll,
    SymbolKind.C_I: psi1,
    SymbolKind.C_LI: _central_lli,
}


@dataclass(frozen=True)
class LinearFunctional:
    """A finitely supported functional g on 𝒟₁, keyed by L/I symbols."""

    group: GroupInstance
    values: Mapping[BasisSymbol, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for sym, value in self.values.items():
            if sym.kind not in (SymbolKind.L, SymbolKind.I):
                raise TagError(f"functionals are defined on L/I symbols, got {sym}")
            self.group.check(sym.x)
            value = self.group.scalar(value)
            if value:
                cleaned[sym] = value
        object.__setattr__(self, "values", cleaned)

    @classmethod
    def zero(cls, group: GroupInstance) -> "LinearFunctional":
        return cls(group)

    def value(self, sym: BasisSymbol) -> Scalar:
        return self.values.get(sym, ZERO)

    def __call__(self, u: AlgebraElement) -> Scalar:
        total = ZERO
        for sym, coeff in u.terms.items():
            if sym in self.values:
                total = total + coeff * self.values[sym]
        return self.group.scalar(total)

    def __add__(self, other: "LinearFunctional") -> "LinearFunctional":
        self.group.require_same(other.group)
        merged = dict(self.values)
        for sym, value in other.values.items():
            merged[sym] = merged.get(sym, ZERO) + value
        return LinearFunctional(self.group, merged)

    def scale(self, k: ScalarLike) -> "LinearFunctional":
        return LinearFunctional(self.group, {s: v * k for s, v in self.values.items()})


@dataclass(frozen=True)
class CohomologyClass:
    """Coordinates in the basis [ψ₁], [ψ₂], [ψ₃] of H²(𝒟₁)."""

    a: Scalar
    b: Scalar
    c: Scalar

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c)

    def to_data(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


@dataclass(frozen=True)
class Cocycle:
    """α = a·ψ₁ + b·ψ₂ + c·ψ₃ + cprime·ψ₃′ + ψ_g with ψ_g(u, v) = g([u, v])."""

    group: GroupInstance
    a: Scalar = ZERO
    b: Scalar = ZERO
    c: Scalar = ZERO
    cprime: Scalar = ZERO
    boundary: LinearFunctional | None = None

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "cprime"):
            object.__setattr__(self, name, self.group.scalar(getattr(self, name)))
        if self.boundary is None:
            object.__setattr__(self, "boundary", LinearFunctional.zero(self.group))
        else:
            self.group.require_same(self.boundary.group)

    def __call__(self, u: AlgebraElement, v: AlgebraElement) -> Scalar:
        return cocycle_eval(self, u, v)

    @property
    def cohomology_class(self) -> CohomologyClass:
        return CohomologyClass(self.a, self.b, self.c)

    def __add__(self, other: "Cocycle") -> "Cocycle":
        self.group.require_same(other.group)
        return Cocycle(
            self.group,
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.cprime + other.cprime,
            self.boundary + other.boundary,
        )

    def scale(self, k: ScalarLike) -> "Cocycle":
        return Cocycle(
            self.group,
            self.a * k,
            self.b * k,
            self.c * k,
            self.cprime * k,
            self.boundary.scale(k),
        )

    def to_data(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "cprime": str(self.cprime),
            "boundary": [[str(sym), str(v)] for sym, v in self.boundary.values.items()],
        }


def cocycle_eval(alpha: Cocycle, u: AlgebraElement, v: AlgebraElement) -> Scalar:
    alpha.group.require_same(u.group)
    if u.tag is AlgebraTag.W:
        u, v = retag(u, AlgebraTag.D1), retag(v, AlgebraTag.D1)
    total = ZERO
    for coeff, form in (
        (alpha.a, psi1),
        (alpha.b, psi2),
        (alpha.c, psi3),
        (alpha.cprime, psi3_prime),
    ):
        if coeff:
            total = total + coeff * form(u, v)
    if alpha.boundary.values:
        total = total + alpha.boundary(commutator(u, v))
    return alpha.group.scalar(total)


def coboundary(g: LinearFunctional) -> Cocycle:
    return Cocycle(g.group, boundary=g)


@dataclass
class CocycleReport:
    passed: bool
    samples: int
    seed: int
    failures: int = 0
    witnesses: list[dict] = field(default_factory=list)

    def to_data(self) -> dict:
        return {
            "passed": self.passed,
            "samples": self.samples,
            "seed": self.seed,
            "failures": self.failures,
            "witnesses": self.witnesses,
        }


def verify_cocycle(
    form: BilinearForm,
    group: GroupInstance,
    *,
    samples: int = 1000,
    seed: int = 0,
    tag: AlgebraTag = AlgebraTag.D1,
    batches: int = 1,
    max_witnesses: int = 5,
) -> CocycleReport:
    """Check antisymmetry and the 2-cocycle identity on seeded random triples."""
    tag = AlgebraTag(tag)
    report = CocycleReport(passed=True, samples=samples, seed=seed)
    per_batch, extra = divmod(samples, max(batches, 1))
    for batch, sampler in enumerate(Sampler(group, seed).spawn(max(batches, 1))):
        for _ in range(per_batch + (1 if batch < extra else 0)):
            u, v, w = (sampler.element(tag) for _ in range(3))
            checks = (
                ("antisymmetry", form(u, v) + form(v, u)),
                (
                    "cocycle_identity",
                    form(lie_bracket(u, v), w)
                    + form(lie_bracket(v, w), u)
                    + form(lie_bracket(w, u), v),
                ),
            )
            for name, value in checks:
                if not value:
                    continue
                report.passed = False
                report.failures += 1
                if len(report.witnesses) < max_witnesses:
                    report.witnesses.append(
                        {
                            "check": name,
                            "batch": batch,
                            "u": str(u),
                            "v": str(v),
                            "w": str(w),
                            "value": str(value),
                        }
                    )
    return report


def _probe(group: GroupInstance, tag: AlgebraTag, sym: BasisSymbol) -> AlgebraElement:
    return AlgebraElement.basis(tag, group, sym)


def _base(group: GroupInstance) -> tuple[GroupElement, Scalar]:
    x0 = group.base_point()
    delta = group.pairing(x0)
    if not delta:
        raise DegeneratePairingError("probe system is singular: ∂(x₀) = 0")
    return x0, delta


def extract_class(
    form: BilinearForm, group: GroupInstance, *, tag: AlgebraTag = AlgebraTag.D1
) -> CohomologyClass:
    """Read (a, b, c) off a cocycle from finitely many probe pairs.

    a comes from the I–I pairing at ±x₀, b from the cubic part of
    k ↦ α(L(kx₀), L(−kx₀)) at k = 1, 2, 3 and c from the quadratic part of
    k ↦ α(L(kx₀), I(−kx₀)) at k = 1, 2. Coboundaries contribute only linear
    terms to these, so they drop out. With ``tag=W`` only b is probed.
    """
    tag = AlgebraTag(tag)
    x0, delta = _base(group)

    def ll(k: int) -> Scalar:
        return form(_probe(group, tag, L(k * x0)), _probe(group, tag, L(-(k * x0))))

    f1, f2, f3 = ll(1), ll(2), ll(3)
    b = (f3 - f2 * 3 + f1 * 3) / (delta**3 * 6)
    if tag is AlgebraTag.W:
        return CohomologyClass(ZERO, b, ZERO)

    a = -form(_probe(group, tag, I(x0)), _probe(group, tag, I(-x0))) / delta

    def li(k: int) -> Scalar:
        return form(_probe(group, tag, L(k * x0)), _probe(group, tag, I(-(k * x0))))

    c = (li(2) - li(1) * 2) / (delta**2 * 2)
    return CohomologyClass(a, b, c)


class RecoveredFunctional:
    """g with ψ_g = r, rebuilt symbol by symbol from a coboundary r.

    𝒟₁ is perfect, so each generator is a bracket: I(x) and L(x) for x ≠ 0
    come from [L(0), ·], I(0) from [L(x₀), I(−x₀)], L(0) from [L(−x₀), L(x₀)].
    """

    def __init__(self, form: BilinearForm, group: GroupInstance) -> None:
        self.form = form
        self.group = group
        self._x0, self._delta = _base(group)
        self._cache: dict[BasisSymbol, Scalar] = {}

    def _pair(self, s: BasisSymbol, t: BasisSymbol) -> Scalar:
        return self.form(
            _probe(self.group, AlgebraTag.D1, s), _probe(self.group, AlgebraTag.D1, t)
        )

    def value(self, sym: BasisSymbol) -> Scalar:
        if sym in self._cache:
            return self._cache[sym]
        if sym.kind not in (SymbolKind.L, SymbolKind.I):
            raise TagError(f"functionals are defined on L/I symbols, got {sym}")
        zero, x0, delta = self.group.zero(), self._x0, self._delta
        if not sym.x.is_zero():
            out = self._pair(L(zero), sym) / self.group.pairing(sym.x)
        elif sym.kind is SymbolKind.I:
            out = self._pair(L(x0), I(-x0)) / (-delta)
        else:
            out = self._pair(L(-x0), L(x0)) / (delta * 2)
        self._cache[sym] = out
        return out

    def __call__(self, u: AlgebraElement) -> Scalar:
        total = ZERO
        for sym, coeff in u.terms.items():
            if not sym.is_central:
                total = total + coeff * self.value(sym)
        return self.group.scalar(total)


def recover_boundary(form: BilinearForm, group: GroupInstance) -> RecoveredFunctional:
    return RecoveredFunctional(form, group)


def class_combination(klass: CohomologyClass) -> BilinearForm:
    """a·ψ₁ + b·ψ₂ + c·ψ₃ as a form."""

    def form(u: AlgebraElement, v: AlgebraElement) -> Scalar:
        total = ZERO
        if klass.a:
            total = total + klass.a * psi1(u, v)
        if klass.b:
            total = total + klass.b * psi2(u, v)
        if klass.c:
            total = total + klass.c * psi3(u, v)
        return total

    return form


# Functional-equation oracles


def cubic_fe_residual(f: Callable[[int], ScalarLike], k: int, l: int) -> Scalar:  # noqa: E741
    """(k−l)f(k+l) − (k+l)(f(k) − f(l))."""
    lhs = as_scalar(f(k + l)) * (k - l)
    rhs = (as_scalar(f(k)) - f(l)) * (k + l)
    return lhs - rhs


def linear_fe_residual(
    f: Callable[[GroupElement], ScalarLike], x: GroupElement, y: GroupElement, group: GroupInstance
) -> Scalar:
    """∂(y−x)f(x+y) − (∂(y)f(y) − ∂(x)f(x))."""
    lhs = group.pairing(y - x) * f(x + y)
    rhs = group.pairing(y) * f(y) - group.pairing(x) * f(x)
    return lhs - rhs


@dataclass(frozen=True)
class OracleSolution:
    equation: str
    window: int
    unknowns: list[int]
    basis: list[list[Fraction]]
    monomials: list[list[Fraction]] | None
    description: list[str] | None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_data(self) -> dict:
        return {
            "equation": self.equation,
            "window": self.window,
            "dimension": self.dimension,
            "unknowns": self.unknowns,
            "basis": [[str(v) for v in row] for row in self.basis],
            "monomials": None
            if self.monomials is None
            else [[str(v) for v in row] for row in self.monomials],
            "description": self.description,
        }


def _normalize_row(row: list[Fraction]) -> tuple[Fraction, ...] | None:
    lead = next((v for v in row if v), None)
    if lead is None:
        return None
    return tuple(v / lead for v in row)


def _check_window(window: int) -> None:
    if window < 3:
        raise HVError(f"window must be at least 3, got {window}")


def polynomial_reduction(
    basis: list[list[Fraction]], points: list[int], max_degree: int = 3
) -> list[list[Fraction]] | None:
    """Rewrite each basis vector as a polynomial in k of degree ≤ max_degree.

    Returns the RREF of the coefficient rows over (1, k, …, k^max_degree), or
    None when some vector is not polynomial of that degree on the window.
    """
    vandermonde = [[Fraction(p) ** j for j in range(max_degree + 1)] for p in points]
    rows = []
    for vector in basis:
        coeffs = linalg.solve(vandermonde, vector)
        if coeffs is None:
            return None
        rows.append(coeffs)
    return linalg.rref_rows(rows)


def _describe(rows: list[list[Fraction]], var: str, scale: Scalar | None = None) -> list[str]:
    out = []
    for row in rows:
        parts = []
        for j, c in enumerate(row):
            if not c:
                continue
            coeff = Scalar(c) if scale is None else Scalar(c) / scale**j
            mono = "1" if j == 0 else (var if j == 1 else f"{var}^{j}")
            if coeff == 1:
                parts.append(mono)
            elif j == 0:
                parts.append(str(coeff))
            else:
                parts.append(f"{coeff}*{mono}")
        out.append(" + ".join(parts))
    return out


def _solve_window(
    equation: str,
    window: int,
    unknowns: list[int],
    rows: list[dict[int, Fraction]],
) -> tuple[list[list[Fraction]], list[list[Fraction]] | None]:
    index = {k: i for i, k in enumerate(unknowns)}
    dense: set[tuple[Fraction, ...]] = set()
    for row in rows:
        vec = [Fraction(0)] * len(unknowns)
        for k, c in row.items():
            if k in index:
                vec[index[k]] += c
        normalized = _normalize_row(vec)
        if normalized is not None:
            dense.add(normalized)
    basis = linalg.nullspace(sorted(dense), len(unknowns))
    return basis, polynomial_reduction(basis, unknowns)


def solve_cubic_fe(window: int) -> OracleSolution:
    """Null space of (k−l)f(k+l) = (k+l)(f(k) − f(l)) on [−N, N] with f(0) = 0."""
    _check_window(window)
    unknowns = [k for k in range(-window, window + 1) if k]
    rows = []
    for k in range(-window, window + 1):
        for l in range(-window, window + 1):  # noqa: E741
            if abs(k + l) > window:
                continue
            row: dict[int, Fraction] = {}
            for key, c in ((k + l, k - l), (k, -(k + l)), (l, k + l)):
                row[key] = row.get(key, Fraction(0)) + c
            rows.append(row)
    basis, monomials = _solve_window("cubic", window, unknowns, rows)
    description = None if monomials is None else _describe(monomials, "k")
    return OracleSolution("cubic", window, unknowns, basis, monomials, description)


def solve_linear_fe(window: int, group: GroupInstance) -> OracleSolution:
    """Null space of ∂(y−x)f(x+y) = ∂(y)f(y) − ∂(x)f(x) along the multiples of x₀.

    With x = kx₀, y = lx₀ every coefficient carries the factor ∂(x₀), which
    is divided out, so the system stays rational in any field.
    """
    _check_window(window)
    _, delta = _base(group)
    unknowns = list(range(-window, window + 1))
    rows = []
    for k in range(-window, window + 1):
        for l in range(-window, window + 1):  # noqa: E741
            if abs(k + l) > window:
                continue
            row: dict[int, Fraction] = {}
            for key, c in ((k + l, l - k), (l, -l), (k, k)):
                row[key] = row.get(key, Fraction(0)) + c
            rows.append(row)
    basis, monomials = _solve_window("linear", window, unknowns, rows)
    description = None if monomials is None else _describe(monomials, "∂(x)", delta)
    return OracleSolution("linear", window, unknowns, basis, monomials, description)
