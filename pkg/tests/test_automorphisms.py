from fractions import Fraction

import pytest
from hypothesis import given, settings

from hv_algebra.automorphisms import (
    AutWord,
    InnerAut,
    ThetaAut,
    compose_theta,
    factor_automorphism,
    homomorphism_defect,
    invert_theta,
    probe_images,
    random_inner,
    random_theta,
    verify_group_laws,
)
from hv_algebra.elements import AlgebraTag
from hv_algebra.errors import EpsilonError, HVError, NotAnAutomorphismError
from hv_algebra.groups import GroupKind, make_group
from hv_algebra.sampling import Sampler

from .strategies import elements

Z = make_group(GroupKind.Z, [1])


def _abc(theta: ThetaAut) -> tuple:
    return (theta.a, theta.b, theta.c)


def test_theta_on_generators(z, parse):
    theta = ThetaAut.build(z, [2], -1, 1, 0, 3)
    assert theta(parse("I(2)")) == parse("12*I(-2)")
    assert theta(parse("L(0)")) == parse("-L(0) + I(0)")


def test_theta_identity(z, parse):
    theta = ThetaAut.build(z, ["1"], 1, 0, 0, 1)
    assert theta.is_identity()
    assert theta(parse("L(5)")) == parse("L(5)")


def test_theta_rejects_bad_parameters(z):
    with pytest.raises(EpsilonError):
        ThetaAut.build(z, eps=2)
    with pytest.raises(NotAnAutomorphismError):
        ThetaAut.build(z, c=0)


def test_theta_on_q_rescales(q, parse):
    theta = ThetaAut.build(q, eps="2/3")
    assert theta(parse("I(3)", group=q)) == parse("I(2)", group=q)
    assert theta(parse("L(3)", group=q)) == parse("3/2*L(2)", group=q)


def test_inner_on_zero_mode(z, parse):
    eta = InnerAut(z, ((1, z.element(1)),))
    assert eta(parse("L(0)")) == parse("L(0) - I(1)")
    assert eta(parse("I(4)")) == parse("I(4)")


def test_inner_factor_needs_nonzero_degree(z):
    with pytest.raises(HVError):
        InnerAut(z, ((1, z.element(0)),))


def test_compose_abc(z):
    t1 = ThetaAut.build(z, a=1, b=2, c=3)
    t2 = ThetaAut.build(z, a=4, b=5, c=6)
    assert _abc(compose_theta(t1, t2)) == (13, 17, 18)


def test_compose_with_reflection(z):
    out = compose_theta(ThetaAut.build(z, a=2), ThetaAut.build(z, eps=-1))
    assert out.a == -2
    assert out.eps == -1


def test_invert(z):
    inv = invert_theta(ThetaAut.build(z, [1], 1, 2, 4, 2))
    assert _abc(inv) == (-1, -2, Fraction(1, 2))


def test_compose_matches_application(z, parse):
    t1 = ThetaAut.build(z, [3], -1, 1, 2, 5)
    t2 = ThetaAut.build(z, ["1/2"], -1, "-1/3", 0, 2)
    u = parse("L(2) - 3*I(-1) + L(0)")
    assert compose_theta(t1, t2)(u) == t1(t2(u))
    assert invert_theta(t1)(t1(u)) == u


def test_factor_round_trip(z):
    word = AutWord(InnerAut(z, ((1, z.element(1)),)), ThetaAut.build(z, [3], -1, 0, 0, 2))
    assert factor_automorphism(word, z) == word


def test_factor_from_images(z):
    word = AutWord(InnerAut(z, ((2, z.element(-1)),)), ThetaAut.build(z, [-1], 1, 1, 1, 3))
    assert factor_automorphism(probe_images(word, z), z) == word


def test_factor_rejects_scaling_of_zero_mode(z):
    with pytest.raises(EpsilonError):
        factor_automorphism(lambda u: u.scale(2), z)


def test_factor_needs_all_probe_images(z):
    images = probe_images(AutWord.identity(z), z)
    images.pop(next(iter(images)))
    with pytest.raises(HVError):
        factor_automorphism(images, z)


def test_word_compose_and_inverse(z, parse):
    w1 = AutWord(InnerAut(z, ((1, z.element(2)),)), ThetaAut.build(z, [2], -1, 1, 0, 3))
    w2 = AutWord(InnerAut(z, (("1/2", z.element(-1)),)), ThetaAut.build(z, [-1], 1, 0, 1, 2))
    u = parse("L(1) + 2*I(3) - L(-2)")
    assert w1.compose(w2)(u) == w1(w2(u))
    assert w1.inverse()(w1(u)) == u


def test_group_laws(z):
    report = verify_group_laws(z, samples=40, seed=9)
    assert report.passed
    assert {c.name for c in report.checks} == {
        "N_closed",
        "a_abelian",
        "c_multiplicative",
        "Nac_normal",
        "eps_projection",
    }
    assert all(c.samples == 40 for c in report.checks)


def test_group_laws_on_q(q):
    assert verify_group_laws(q, samples=20, seed=2).passed


@settings(max_examples=40)
@given(elements(Z, AlgebraTag.D1), elements(Z, AlgebraTag.D1))
def test_random_words_are_homomorphisms(u, v):
    sampler = Sampler(Z, 17)
    word = AutWord(random_inner(sampler), random_theta(sampler))
    assert homomorphism_defect(word, u, v).is_zero()


def test_conjugating_by_reflection_matches_closed_form(z, parse):
    nu = ThetaAut.build(z, eps=-1)
    rho = ThetaAut.build(z, [2], 1, 3, 5, 7)
    conj = compose_theta(compose_theta(nu, rho), invert_theta(nu))
    assert conj == ThetaAut.build(z, ["1/2"], 1, -3, 5, 7)
    for text in ("L(2)", "I(-3)", "L(0) + 2*I(1)"):
        u = parse(text)
        assert conj(u) == nu(rho(invert_theta(nu)(u)))


def test_conjugating_by_rescaling_on_q(q):
    nu = ThetaAut.build(q, eps="2/3")
    rho = ThetaAut.build(q, eps=1, a=4, b="1/2", c=3)
    conj = compose_theta(compose_theta(nu, rho), invert_theta(nu))
    assert conj == ThetaAut.build(q, eps=1, a="8/3", b="1/2", c=3)
