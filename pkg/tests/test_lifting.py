import pytest

from hv_algebra.automorphisms import (
    AutWord,
    InnerAut,
    ThetaAut,
    homomorphism_defect,
    lift_automorphism_to_hv,
)
from hv_algebra.brackets import hv_bracket
from hv_algebra.derivations import Derivation, leibniz_defect, lift_derivation_to_hv
from hv_algebra.elements import (
    CENTRAL_KINDS,
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    SymbolKind,
    L,
)
from hv_algebra.errors import NotAnAutomorphismError, TagError
from hv_algebra.groups import AdditiveMap
from hv_algebra.sampling import Sampler


def _center(group, kind, coeff=1):
    return AlgebraElement.basis(AlgebraTag.HV, group, BasisSymbol(SymbolKind(kind)), coeff)


def _hv_probes(group):
    sampler = Sampler(group, 99)
    return [sampler.element(AlgebraTag.HV) for _ in range(12)]


def test_identity_lift_fixes_center(z):
    lifted = lift_automorphism_to_hv(AutWord.identity(z))
    for kind in CENTRAL_KINDS:
        assert lifted.central_image(kind) == _center(z, kind)


def test_theta_lift_scales_center(z):
    lifted = lift_automorphism_to_hv(ThetaAut.build(z, c=2))
    assert lifted.central_image(SymbolKind.C_I) == _center(z, SymbolKind.C_I, 4)
    assert lifted.central_image(SymbolKind.C_LI) == _center(z, SymbolKind.C_LI, 2)
    assert lifted.central_image(SymbolKind.C_L) == _center(z, SymbolKind.C_L)


def test_inner_automorphism_lift_fixes_center(z):
    lifted = lift_automorphism_to_hv(InnerAut(z, ((1, z.element(2)),)))
    for kind in CENTRAL_KINDS:
        assert lifted.central_image(kind) == _center(z, kind)


def test_inner_derivation_lift_kills_center(z, parse):
    lifted = lift_derivation_to_hv(Derivation.inner(parse("L(1) - 2*I(-1)")))
    for kind in CENTRAL_KINDS:
        assert lifted.central_image(kind).is_zero()


def test_xi_of_pairing_lift_is_ad_zero_mode(z, parse):
    lifted = lift_derivation_to_hv(Derivation.xi(AdditiveMap.pairing(z)))
    ad = parse("L(0)", "HV")
    for u in _hv_probes(z):
        assert lifted(u) == hv_bracket(ad, u)


def test_lifted_derivation_satisfies_leibniz(z):
    d = Derivation.from_parameters(AdditiveMap(z, (3,)), 1, -2, "1/2")
    lifted = lift_derivation_to_hv(d)
    probes = _hv_probes(z)
    for u, v in zip(probes, probes[1:]):
        assert leibniz_defect(lifted, u, v).is_zero()


def test_lifted_automorphism_is_homomorphism(z2):
    word = AutWord(
        InnerAut(z2, ((1, z2.element(1, 0)),)), ThetaAut.build(z2, [2, -1], -1, 1, "1/2", 3)
    )
    lifted = lift_automorphism_to_hv(word)
    probes = _hv_probes(z2)
    for u, v in zip(probes, probes[1:]):
        assert homomorphism_defect(lifted, u, v).is_zero()


def test_lifted_map_rejects_d1(z, parse):
    lifted = lift_automorphism_to_hv(AutWord.identity(z))
    with pytest.raises(TagError):
        lifted(parse("L(1)"))


def test_non_automorphism_fails_to_lift(z):
    def twist(u: AlgebraElement) -> AlgebraElement:
        terms = list(u.terms.items())
        terms += [(L(s.x), c) for s, c in u.terms.items() if s.kind is SymbolKind.I]
        return AlgebraElement.build(AlgebraTag.D1, z, terms)

    with pytest.raises(NotAnAutomorphismError) as exc:
        lift_automorphism_to_hv(twist, z, verify_samples=200)
    assert exc.value.detail
