import pytest
from hypothesis import given, settings

from hv_algebra.derivations import (
    Derivation,
    decompose_degree0,
    degree_components,
    derive,
    leibniz_defect,
)
from hv_algebra.elements import AlgebraTag
from hv_algebra.errors import NotADerivationError, TagError, UnboundedSupportError
from hv_algebra.groups import AdditiveMap, GroupKind, make_group
from hv_algebra.parser import parse_element
from hv_algebra.suites import quadratic_reference_group

from .strategies import elements

Z = make_group(GroupKind.Z, [1])
Z2_QUAD = quadratic_reference_group()
W = parse_element("L(2) - 3*I(-1)", Z, "D1")


def test_sigma_actions(z, parse):
    assert Derivation.sigma(z, 1)(parse("L(3)")) == parse("3*I(3)")
    assert Derivation.sigma(z, 2)(parse("L(3) + I(1)")) == parse("I(3)")
    assert Derivation.sigma(z, 3)(parse("L(5)")).is_zero()
    assert Derivation.sigma(z, 3)(parse("I(5)")) == parse("I(5)")


def test_sigma_index_checked(z):
    with pytest.raises(TagError):
        Derivation.sigma(z, 4)


def test_xi(z2, parse):
    d = Derivation.xi(AdditiveMap(z2, (1, 0)))
    assert d(parse("L(2,3)", group=z2)) == parse("2*L(2,3)", group=z2)


def test_inner_derivation(z, parse):
    d = Derivation.inner(parse("L(0)"))
    assert d(parse("L(4) - I(-2)")) == parse("4*L(4) + 2*I(-2)")


def test_inner_needs_d1(parse):
    with pytest.raises(TagError):
        Derivation.inner(parse("L(0)", "W"))


def test_derivation_arithmetic(z, parse):
    d = Derivation.sigma(z, 1).scale(2) - Derivation.sigma(z, 2)
    assert d(parse("L(3)")) == parse("5*I(3)")
    assert d.describe() == "2*sigma1 + -1*sigma2"


def test_derive_rejects_wrong_tag(z, parse):
    with pytest.raises(TagError):
        derive(Derivation.sigma(z, 1), parse("L(1)", "HV"))


def test_generic0_violating_leibniz(z, parse):
    d = Derivation.generic0(z, lambda x: x.coords[0] ** 2, lambda x: 0, lambda x: 0)
    assert not leibniz_defect(d, parse("L(1)"), parse("I(1)")).is_zero()


def test_generic0_matching_xi_is_a_derivation(z, parse):
    d = Derivation.generic0(z, lambda x: x.coords[0], lambda x: x.coords[0], lambda x: 0)
    assert leibniz_defect(d, parse("L(1) + I(2)"), parse("L(-3) - 2*I(0)")).is_zero()


def test_degree_components(z, parse):
    tail = Derivation.xi(AdditiveMap.pairing(z)) + Derivation.inner(parse("I(1)"))
    assert set(degree_components(tail, z)) == {z.element(0), z.element(1)}
    assert set(degree_components(Derivation.sigma(z, 1), z)) == {z.element(0)}
    spread = Derivation.inner(parse("I(1) + I(-1)"))
    assert set(degree_components(spread, z)) == {z.element(1), z.element(-1)}


def test_degree_components_cap(z, parse):
    d = Derivation.inner(parse("I(1) + I(2) + I(3)"))
    with pytest.raises(UnboundedSupportError):
        degree_components(d, z, max_support=2)


def test_decompose_round_trip(z2):
    mu = AdditiveMap(z2, (1, -1))
    result = decompose_degree0(Derivation.from_parameters(mu, 2, 3, 5), z2)
    assert result.mu.generator_images == (1, -1)
    assert (result.a, result.b, result.c0) == (2, 3, 5)


def test_inner_zero_mode_is_xi_of_pairing(z2, parse):
    d = Derivation.inner(parse("L(0,0)", group=z2))
    result = decompose_degree0(d, z2)
    assert result.mu.generator_images == z2.pairing_values
    assert result.mu.pairing_multiple() == 1
    assert (result.a, result.b, result.c0) == (0, 0, 0)


def test_decompose_rejects_non_derivation(z, parse):
    d = Derivation.generic0(z, lambda x: x.coords[0] ** 2, lambda x: 0, lambda x: 0)
    with pytest.raises(NotADerivationError) as exc:
        decompose_degree0(d, z)
    assert "generator" in exc.value.detail or "defect" in exc.value.detail


@settings(max_examples=60)
@given(elements(Z, AlgebraTag.D1), elements(Z, AlgebraTag.D1))
def test_combination_satisfies_leibniz(u, v):
    d = Derivation.from_parameters(AdditiveMap(Z, ("1/2",)), 2, -1, 3) + Derivation.inner(W)
    assert leibniz_defect(d, u, v).is_zero()


@settings(max_examples=40)
@given(elements(Z2_QUAD, AlgebraTag.D1), elements(Z2_QUAD, AlgebraTag.D1))
def test_sigmas_satisfy_leibniz_over_quadratic_field(u, v):
    for index in (1, 2, 3):
        assert leibniz_defect(Derivation.sigma(Z2_QUAD, index), u, v).is_zero()
