"""Seeded property suites behind ``hv verify``.

Every suite draws from its own Philox stream spawned from the run seed, so a
suite's witnesses do not depend on which other suites were selected.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from hv_algebra.automorphisms import (
    AutWord,
    ThetaAut,
    apply_theta,
    compose_theta,
    factor_automorphism,
    homomorphism_defect,
    invert_theta,
    lift_automorphism_to_hv,
    random_inner,
    random_theta,
    verify_group_laws,
)
from hv_algebra.brackets import (
    DEFAULT_MAX_POWER,
    commutator,
    diffop_product,
    grade_components,
    hv_bracket,
    jacobi_defect,
    lie_bracket,
    project_to_d1,
    witt_bracket,
)
from hv_algebra.cohomology import (
    Cocycle,
    LinearFunctional,
    canonical_cocycles,
    coboundary,
    cubic_fe_residual,
    extract_class,
    psi2,
    psi3_prime,
    solve_cubic_fe,
    solve_linear_fe,
    verify_cocycle,
    witt_cocycle,
)
from hv_algebra.derivations import (
    Derivation,
    decompose_degree0,
    degree_components,
    lift_derivation_to_hv,
    leibniz_defect,
)
from hv_algebra.elements import (
    C_I,
    C_L,
    C_LI,
    AlgebraElement,
    AlgebraTag,
    I,
    L,
    SymbolKind,
    probe_symbols,
    retag,
)
from hv_algebra.groups import (
    AdditiveMap,
    GroupInstance,
    GroupKind,
    epsilon_in_E,
    make_group,
    verify_nondegenerate,
)
from hv_algebra.parser import parse_element
from hv_algebra.sampling import SEED_ALGORITHM, Sampler
from hv_algebra.scalars import ONE, FieldConfig

SUITE_NAMES = (
    "foundations",
    "jacobi",
    "embedding",
    "cocycles",
    "oracles",
    "derivations",
    "automorphisms",
    "lifts",
    "group-laws",
    "roundtrip",
)

DEFAULT_SAMPLES: dict[str, int] = {
    "foundations": 1000,
    "jacobi": 1000,
    "jacobi_quadratic": 500,
    "embedding": 500,
    "projection": 1000,
    "associativity": 500,
    "cocycles": 1000,
    "extraction": 100,
    "derivations": 1000,
    "decompositions": 100,
    "automorphisms": 1000,
    "compositions": 200,
    "composition_elements": 50,
    "inverses": 100,
    "factorizations": 100,
    "lifts": 500,
    "group_laws": 200,
    "roundtrip": 1000,
    "roundtrip_quadratic": 500,
}


def quadratic_reference_group() -> GroupInstance:
    """Z² with ∂(m, n) = m + n·√2 over Q(√2)."""
    field_cfg = FieldConfig("quadratic", 2)
    return make_group(GroupKind.Z2, [1, field_cfg.sqrt()], field_cfg)


@dataclass
class SuiteSettings:
    group: GroupInstance
    seed: int = 0
    samples: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_SAMPLES))
    probe_radius: int = 3
    window: int = 10
    psi2_degree: int = 3
    batches: int = 1
    max_power: int = DEFAULT_MAX_POWER

    def count(self, key: str) -> int:
        return self.samples.get(key, DEFAULT_SAMPLES[key])


@dataclass
class SuiteResult:
    name: str
    seed: int
    passed: bool = True
    samples: int = 0
    seconds: float = 0.0
    checks: dict[str, dict] = field(default_factory=dict)
    counterexample: dict | None = None

    def check(
        self,
        name: str,
        ok: bool,
        witness: Callable[[], dict] | None = None,
        *,
        samples: int = 1,
    ) -> bool:
        entry = self.checks.setdefault(name, {"passed": True, "samples": 0})
        entry["samples"] += samples
        self.samples += samples
        if not ok:
            entry["passed"] = False
            if self.passed:
                self.counterexample = {"check": name, "seed": self.seed}
                if witness is not None:
                    self.counterexample.update(witness())
            self.passed = False
        return ok

    def to_data(self, timing: bool = True) -> dict:
        data = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "samples": self.samples,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }
        if timing:
            data["seconds"] = round(self.seconds, 3)
        return data


@dataclass
class Report:
    seed: int
    group: dict
    suites: list[SuiteResult] = field(default_factory=list)
    seed_algorithm: str = SEED_ALGORITHM

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_data(self, timing: bool = True) -> dict:
        return {
            "passed": self.passed,
            "seed": self.seed,
            "seed_algorithm": self.seed_algorithm,
            "group": self.group,
            "suites": [s.to_data(timing) for s in self.suites],
        }


SuiteFn = Callable[[SuiteSettings, Sampler, SuiteResult], None]


def _foundations(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    g = s.group
    out.check("nondegenerate", verify_nondegenerate(g))
    chi, mu = rnd.character(), rnd.additive_map()
    for _ in range(s.count("foundations")):
        x, y, z = rnd.scalar(), rnd.scalar(), rnd.scalar()
        out.check(
            "field_axioms",
            (x + y) + z == x + (y + z)
            and x * y == y * x
            and x * (y + z) == x * y + x * z
            and (not x or x * x.inverse() == ONE),
            lambda: {"x": str(x), "y": str(y), "z": str(z)},
        )
        p, q = rnd.group_element(), rnd.group_element()
        out.check(
            "pairing_additive",
            g.pairing(p + q) == g.pairing(p) + g.pairing(q),
            lambda: {"x": str(p), "y": str(q)},
        )
        out.check(
            "homomorphisms",
            chi(p + q) == chi(p) * chi(q) and mu(p + q) == mu(p) + mu(q),
            lambda: {"x": str(p), "y": str(q)},
        )
        e1, e2 = rnd.epsilon(), rnd.epsilon()
        out.check(
            "epsilon_closed",
            epsilon_in_E(g, e1 * e2),
            lambda: {"e1": str(e1), "e2": str(e2)},
        )


def _jacobi_on(
    g: GroupInstance, rnd: Sampler, out: SuiteResult, n: int, tags: tuple[AlgebraTag, ...]
) -> None:
    for tag in tags:
        for _ in range(n):
            u, v, w = rnd.element(tag), rnd.element(tag), rnd.element(tag)
            out.check(
                f"jacobi_{tag.value}",
                jacobi_defect(u, v, w).is_zero(),
                lambda: {"u": str(u), "v": str(v), "w": str(w)},
            )
            k = rnd.coefficient()
            out.check(
                f"bilinear_antisymmetric_{tag.value}",
                (lie_bracket(u, v) + lie_bracket(v, u)).is_zero()
                and lie_bracket(u + w.scale(k), v)
                == lie_bracket(u, v) + lie_bracket(w, v).scale(k),
                lambda: {"u": str(u), "v": str(v), "w": str(w), "k": str(k)},
            )


def _jacobi(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    n = s.count("jacobi")
    _jacobi_on(s.group, rnd, out, n, (AlgebraTag.HV, AlgebraTag.W, AlgebraTag.D1))
    quad = quadratic_reference_group()
    if quad != s.group:
        qrnd = Sampler(quad, rnd.seed_sequence.spawn(1)[0], radius=rnd.radius)
        _jacobi_on(quad, qrnd, out, s.count("jacobi_quadratic"), (AlgebraTag.HV,))
    for _ in range(n):
        x, y = rnd.group_element(), rnd.group_element()
        u, v = rnd.homogeneous(AlgebraTag.HV, x), rnd.homogeneous(AlgebraTag.HV, y)
        degrees = set(grade_components(hv_bracket(u, v)))
        out.check(
            "grading",
            degrees <= {x + y, s.group.zero()},
            lambda: {"u": str(u), "v": str(v)},
        )


def _embedding(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    for _ in range(s.count("embedding")):
        u, v = rnd.element(AlgebraTag.W), rnd.element(AlgebraTag.W)
        lhs = retag(witt_bracket(u, v), AlgebraTag.D)
        rhs = commutator(retag(u, AlgebraTag.D), retag(v, AlgebraTag.D), max_power=s.max_power)
        out.check("witt_in_D", lhs == rhs, lambda: {"u": str(u), "v": str(v)})
    for _ in range(s.count("projection")):
        u, v = rnd.element(AlgebraTag.HV), rnd.element(AlgebraTag.HV)
        out.check(
            "projection_homomorphism",
            project_to_d1(hv_bracket(u, v)) == commutator(project_to_d1(u), project_to_d1(v)),
            lambda: {"u": str(u), "v": str(v)},
        )
    for _ in range(s.count("associativity")):
        u, v, w = (rnd.element(AlgebraTag.D) for _ in range(3))
        mp = s.max_power
        out.check(
            "associativity",
            diffop_product(diffop_product(u, v, max_power=mp), w, max_power=mp)
            == diffop_product(u, diffop_product(v, w, max_power=mp), max_power=mp),
            lambda: {"u": str(u), "v": str(v), "w": str(w)},
        )
        out.check(
            "commutator_jacobi",
            jacobi_defect(u, v, w).is_zero(),
            lambda: {"u": str(u), "v": str(v), "w": str(w)},
        )


def _random_functional(rnd: Sampler) -> LinearFunctional:
    values = {}
    for _ in range(rnd.integer(1, 4)):
        x = rnd.group_element()
        values[L(x) if rnd.integer(0, 1) else I(x)] = rnd.scalar()
    return LinearFunctional(rnd.group, values)


def _cocycle_witness(name: str, seed: int, witness: dict) -> dict:
    # the identity that broke goes under "identity"; "check" names the suite check
    out = {"cocycle": name, "verify_seed": seed, **witness}
    out["identity"] = out.pop("check")
    return out


def _cocycles(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    g = s.group
    n = s.count("cocycles")
    for name, form in canonical_cocycles(s.psi2_degree).items():
        tag = AlgebraTag.W if name == "psi" else AlgebraTag.D1
        seed = rnd.integer(0, 2**62)
        report = verify_cocycle(form, g, samples=n, seed=seed, tag=tag, batches=s.batches)
        out.check(
            f"cocycle_{name}",
            report.passed,
            lambda: _cocycle_witness(name, seed, report.witnesses[0]),
            samples=n,
        )
    minus_one = LinearFunctional(g, {I(g.zero()): -1})
    for _ in range(n):
        u, v = rnd.element(AlgebraTag.D1), rnd.element(AlgebraTag.D1)
        out.check(
            "psi3_prime_is_coboundary",
            psi3_prime(u, v) == coboundary(minus_one)(u, v),
            lambda: {"u": str(u), "v": str(v)},
        )
    for _ in range(s.count("extraction")):
        a, b, c = rnd.scalar(), rnd.scalar(), rnd.scalar()
        bnd = _random_functional(rnd)
        alpha = Cocycle(g, a, b, c, rnd.scalar(), bnd)
        got = extract_class(alpha, g)
        out.check(
            "extract_roundtrip",
            got == alpha.cohomology_class,
            lambda: {"cocycle": alpha.to_data(), "extracted": got.to_data()},
        )
        out.check(
            "coboundary_class_zero",
            extract_class(coboundary(bnd), g).is_zero(),
            lambda: {"boundary": alpha.to_data()["boundary"]},
        )
        shifted = alpha + coboundary(_random_functional(rnd))
        out.check(
            "extract_coboundary_invariant",
            extract_class(shifted, g) == got,
            lambda: {"cocycle": shifted.to_data()},
        )
    witt = extract_class(witt_cocycle, g, tag=AlgebraTag.W)
    out.check(
        "witt_matches_psi2",
        witt.b == extract_class(psi2, g, tag=AlgebraTag.W).b == ONE,
        lambda: {"witt": witt.to_data()},
    )


def _oracles(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    zero, one = Fraction(0), Fraction(1)
    cubic = solve_cubic_fe(s.window)
    out.check(
        "cubic_fe",
        cubic.dimension == 2
        and cubic.monomials == [[zero, one, zero, zero], [zero, zero, one, zero]],
        lambda: cubic.to_data(),
    )
    linear_group = make_group(GroupKind.Z, [1])
    linear = solve_linear_fe(s.window, linear_group)
    out.check(
        "linear_fe",
        linear.dimension == 2
        and linear.monomials == [[one, zero, zero, zero], [zero, one, zero, zero]],
        lambda: linear.to_data(),
    )
    window = range(-s.window, s.window + 1)
    out.check(
        "cubic_fe_identity_solution",
        all(
            not cubic_fe_residual(lambda k: k, k, m)
            for k in window
            for m in window
            if abs(k + m) <= s.window
        ),
        samples=len(window) ** 2,
    )
    out.check("cubic_fe_rejects_cube", bool(cubic_fe_residual(lambda k: k**3, 1, 2)))


def _derivation_families(rnd: Sampler) -> dict[str, Derivation]:
    g = rnd.group
    families = {
        "sigma1": Derivation.sigma(g, 1),
        "sigma2": Derivation.sigma(g, 2),
        "sigma3": Derivation.sigma(g, 3),
        "xi": Derivation.xi(rnd.additive_map()),
        "inner": Derivation.inner(rnd.element(AlgebraTag.D1)),
    }
    combo = Derivation.zero(g)
    for d in families.values():
        combo = combo + d.scale(rnd.coefficient())
    families["combination"] = combo
    return families


def _derivations(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    g = s.group
    for name, d in _derivation_families(rnd).items():
        for _ in range(s.count("derivations")):
            u, v = rnd.element(AlgebraTag.D1), rnd.element(AlgebraTag.D1)
            out.check(
                f"leibniz_{name}",
                leibniz_defect(d, u, v).is_zero(),
                lambda: {"derivation": d.describe(), "u": str(u), "v": str(v)},
            )
    for _ in range(s.count("decompositions")):
        mu = rnd.additive_map()
        a, b, c0 = rnd.scalar(), rnd.scalar(), rnd.scalar()
        d = Derivation.from_parameters(mu, a, b, c0)
        got = decompose_degree0(d, g)
        out.check(
            "decompose_roundtrip",
            (got.mu, got.a, got.b, got.c0) == (mu, a, b, c0),
            lambda: {"derivation": d.describe(), "got": got.to_data()},
        )
        rebuilt = got.rebuild()
        fresh = [rnd.symbol(AlgebraTag.D1) for _ in range(50)]
        out.check(
            "decompose_agrees_on_fresh_probes",
            all(rebuilt.on_symbol(sym) == d.on_symbol(sym) for sym in fresh),
            lambda: {"derivation": d.describe()},
        )
    partial = AlgebraElement.basis(AlgebraTag.D1, g, L(g.zero()))
    inner_d = decompose_degree0(Derivation.inner(partial), g)
    out.check(
        "inner_partial_is_xi_pairing",
        inner_d.mu == AdditiveMap.pairing(g) and not (inner_d.a or inner_d.b or inner_d.c0),
        lambda: inner_d.to_data(),
    )
    x = rnd.group_element(nonzero=True)
    d = Derivation.sigma(g, 1) + Derivation.inner(AlgebraElement.basis(AlgebraTag.D1, g, L(x)))
    parts = degree_components(d, g)
    out.check(
        "degree_components_sum",
        set(parts) <= {g.zero(), x}
        and all(
            sum(
                (comp[sym] for comp in parts.values() if sym in comp),
                AlgebraElement.zero(AlgebraTag.D1, g),
            )
            == d.on_symbol(sym)
            for sym in probe_symbols(g)
        ),
        lambda: {"derivation": d.describe()},
    )


def _automorphisms(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    g = s.group
    for _ in range(s.count("compositions")):
        t1, t2 = random_theta(rnd), random_theta(rnd)
        t12 = compose_theta(t1, t2)
        for _ in range(s.count("composition_elements")):
            u = rnd.element(AlgebraTag.D1)
            out.check(
                "compose_pointwise",
                apply_theta(t12, u) == t1(t2(u)),
                lambda: {"theta1": t1.to_data(), "theta2": t2.to_data(), "u": str(u)},
            )
    identity = ThetaAut.identity(g)
    for _ in range(s.count("inverses")):
        t = random_theta(rnd)
        inv = invert_theta(t)
        u = rnd.element(AlgebraTag.D1)
        out.check(
            "inverse",
            compose_theta(t, inv) == identity
            and compose_theta(inv, t) == identity
            and inv(t(u)) == u,
            lambda: {"theta": t.to_data(), "u": str(u)},
        )
    for _ in range(s.count("automorphisms")):
        t, eta = random_theta(rnd), random_inner(rnd)
        u, v = rnd.element(AlgebraTag.D1), rnd.element(AlgebraTag.D1)
        out.check(
            "homomorphism_theta",
            homomorphism_defect(t, u, v).is_zero(),
            lambda: {"theta": t.to_data(), "u": str(u), "v": str(v)},
        )
        out.check(
            "homomorphism_inner",
            homomorphism_defect(eta, u, v).is_zero(),
            lambda: {"inner": eta.to_data(), "u": str(u), "v": str(v)},
        )
    probes = [AlgebraElement.basis(AlgebraTag.D1, g, sym) for sym in probe_symbols(g)]
    for _ in range(s.count("factorizations")):
        word = AutWord(random_inner(rnd), random_theta(rnd))
        got = factor_automorphism(word, g)
        out.check(
            "factor_roundtrip",
            got.theta == word.theta and all(got(p) == word(p) for p in probes),
            lambda: {"word": word.to_data(), "factored": got.to_data()},
        )
        t = word.theta
        out.check(
            "theta_grading",
            all(
                set(grade_components(t(p))) <= {next(iter(p.terms)).x.scale(t.eps.to_fraction())}
                for p in probes
            ),
            lambda: {"theta": t.to_data()},
        )
        out.check(
            "inner_fixes_I",
            all(
                word.inner(p) == p
                for p in probes
                if next(iter(p.terms)).kind is SymbolKind.I
            ),
            lambda: {"inner": word.inner.to_data()},
        )
    for y in g.probe_points():
        if y.is_zero():
            continue
        tz = AlgebraElement.basis(AlgebraTag.D1, g, I(y))
        out.check(
            "ad_square_zero",
            all(commutator(tz, commutator(tz, p)).is_zero() for p in probes),
            lambda: {"z": str(y)},
        )


def _lifts(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    g = s.group
    n = s.count("lifts")
    for name, d in _derivation_families(rnd).items():
        lifted = lift_derivation_to_hv(d, g, seed=rnd.integer(0, 2**62))
        for _ in range(n):
            u, v = rnd.element(AlgebraTag.HV), rnd.element(AlgebraTag.HV)
            out.check(
                f"lifted_leibniz_{name}",
                leibniz_defect(lifted, u, v).is_zero(),
                lambda: {"derivation": d.describe(), "u": str(u), "v": str(v)},
            )
        if name == "inner":
            out.check(
                "inner_lift_kills_center",
                all(lifted.central_image(k).is_zero() for k in lifted.central_images),
                lambda: {"derivation": d.describe(), "lift": lifted.to_data()},
            )
    t1, t2 = random_theta(rnd), random_theta(rnd)
    word = AutWord(random_inner(rnd), random_theta(rnd))
    lifts = {
        "theta": (t1, lift_automorphism_to_hv(t1)),
        "word": (word, lift_automorphism_to_hv(word)),
    }
    for name, (pi, lifted) in lifts.items():
        for _ in range(n):
            u, v = rnd.element(AlgebraTag.HV), rnd.element(AlgebraTag.HV)
            out.check(
                f"lifted_homomorphism_{name}",
                homomorphism_defect(lifted, u, v).is_zero(),
                lambda: {"automorphism": pi.to_data(), "u": str(u), "v": str(v)},
            )
    lift1, lift2 = lifts["theta"][1], lift_automorphism_to_hv(t2)
    lift12 = lift_automorphism_to_hv(compose_theta(t1, t2))
    hv_probes = [AlgebraElement.basis(AlgebraTag.HV, g, sym) for sym in probe_symbols(g)]
    hv_probes += [AlgebraElement.basis(AlgebraTag.HV, g, c) for c in (C_L, C_I, C_LI)]
    out.check(
        "lift_of_composition",
        all(lift12(p) == lift1(lift2(p)) for p in hv_probes),
        lambda: {"theta1": t1.to_data(), "theta2": t2.to_data()},
        samples=len(hv_probes),
    )
    ident = lift_automorphism_to_hv(ThetaAut.identity(g))
    out.check(
        "identity_lift_fixes_center",
        all(ident(p) == p for p in hv_probes),
        samples=len(hv_probes),
    )


def _group_laws(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    seed = rnd.integer(0, 2**62)
    report = verify_group_laws(s.group, samples=s.count("group_laws"), seed=seed)
    for law in report.checks:
        out.check(
            law.name,
            law.passed,
            lambda: {"verify_seed": seed, **(law.witness or {})},
            samples=law.samples,
        )


def _roundtrip_on(g: GroupInstance, rnd: Sampler, out: SuiteResult, n: int, name: str) -> None:
    tags = (AlgebraTag.HV, AlgebraTag.W, AlgebraTag.D1, AlgebraTag.D)
    for i in range(n):
        tag = tags[i % len(tags)]
        e = rnd.element(tag)
        if g.field.is_quadratic:
            # coefficients with a sqrt part exercise the parenthesized form
            e = e.scale(rnd.scalar(nonzero=True))
        text = str(e)
        parsed = parse_element(text, g, tag)
        out.check(
            name,
            parsed == e and str(parsed) == text,
            lambda: {"algebra": tag.value, "text": text, "reparsed": str(parsed)},
        )


def _roundtrip(s: SuiteSettings, rnd: Sampler, out: SuiteResult) -> None:
    _roundtrip_on(s.group, rnd, out, s.count("roundtrip"), "parse_print")
    quad = quadratic_reference_group()
    if quad != s.group:
        qrnd = Sampler(quad, rnd.seed_sequence.spawn(1)[0], radius=rnd.radius)
        _roundtrip_on(quad, qrnd, out, s.count("roundtrip_quadratic"), "parse_print_quadratic")


SUITES: dict[str, SuiteFn] = {
    "foundations": _foundations,
    "jacobi": _jacobi,
    "embedding": _embedding,
    "cocycles": _cocycles,
    "oracles": _oracles,
    "derivations": _derivations,
    "automorphisms": _automorphisms,
    "lifts": _lifts,
    "group-laws": _group_laws,
    "roundtrip": _roundtrip,
}


def run_suite(
    settings: SuiteSettings,
    suites: list[str] | tuple[str, ...] = SUITE_NAMES,
    *,
    progress: Callable[[SuiteResult], None] | None = None,
) -> Report:
    """Run the selected suites in canonical order; an empty selection passes."""
    unknown = [name for name in suites if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    report = Report(seed=settings.seed, group=settings.group.to_data())
    streams = Sampler(settings.group, settings.seed, radius=settings.probe_radius).spawn(
        len(SUITE_NAMES)
    )
    for index, name in enumerate(SUITE_NAMES):
        if name not in suites:
            continue
        result = SuiteResult(name=name, seed=settings.seed)
        started = time.perf_counter()
        SUITES[name](settings, streams[index], result)
        result.seconds = time.perf_counter() - started
        report.suites.append(result)
        if progress is not None:
            progress(result)
    return report
