from fractions import Fraction

import pytest
from hypothesis import given

from hv_algebra.errors import ArityError, CharacterError, DegeneratePairingError, EpsilonError
from hv_algebra.groups import (
    AdditiveMap,
    Character,
    GroupElement,
    GroupInstance,
    GroupKind,
    degeneracy_witness,
    epsilon_in_E,
    make_group,
    pairing_eval,
    verify_nondegenerate,
)
from hv_algebra.scalars import FieldConfig
from hv_algebra.suites import quadratic_reference_group

from .strategies import group_elements

Z = make_group(GroupKind.Z, [1])
Z2_QUAD = quadratic_reference_group()


def test_pairing_on_z(z):
    assert pairing_eval(z, z.element(5)) == 5


def test_pairing_on_z2(z2):
    value = pairing_eval(z2, z2.element(1, 1))
    assert value == z2.scalar(1) + z2.field.sqrt()


def test_rational_pairing_on_z2_is_degenerate():
    with pytest.raises(DegeneratePairingError) as exc:
        make_group(GroupKind.Z2, [1, 1])
    assert exc.value.detail == {"witness": "-1,1"}


def test_degeneracy_witness_is_primitive():
    g = GroupInstance(GroupKind.Z2, (2, 4))
    assert degeneracy_witness(g) == GroupElement((-2, 1))


def test_irrational_ratio_is_nondegenerate(z2):
    assert verify_nondegenerate(z2)


def test_zero_pairing_rejected():
    with pytest.raises(DegeneratePairingError):
        make_group(GroupKind.Z, [0])


def test_element_arity(z, z2):
    with pytest.raises(ArityError):
        z.element(1, 2)
    with pytest.raises(ArityError):
        z2.element(1)
    with pytest.raises(ArityError):
        z.element(Fraction(1, 2))


@pytest.mark.parametrize(
    "kind,eps,expected",
    [
        (GroupKind.Z, -1, True),
        (GroupKind.Z, 1, True),
        (GroupKind.Z, 2, False),
        (GroupKind.Q, Fraction(2, 3), True),
    ],
)
def test_epsilon_in_E(kind, eps, expected):
    assert epsilon_in_E(make_group(kind, [1]), eps) is expected


def test_epsilon_must_be_nonzero_and_rational(z2):
    with pytest.raises(EpsilonError):
        epsilon_in_E(z2, 0)
    with pytest.raises(EpsilonError):
        epsilon_in_E(z2, z2.field.sqrt())


def test_character_eval(z):
    chi = Character(z, (2,))
    assert chi(z.element(3)) == 8
    assert chi(z.element(-1)) == Fraction(1, 2)


def test_character_on_q_must_be_trivial(q):
    assert Character.trivial(q)(q.element(Fraction(7, 3))) == 1
    with pytest.raises(CharacterError):
        Character(q, (2,))


def test_character_values_nonzero(z):
    with pytest.raises(CharacterError):
        Character(z, (0,))


def test_additive_map(z2):
    mu = AdditiveMap(z2, (1, -1))
    assert mu(z2.element(2, 3)) == -1
    assert AdditiveMap.pairing(z2).pairing_multiple() == 1
    assert mu.pairing_multiple() is None


def test_rank_above_two_is_always_degenerate():
    with pytest.raises(DegeneratePairingError):
        make_group(GroupKind.Z3, [1, 2, 3])
    with pytest.raises(DegeneratePairingError):
        make_group(GroupKind.Z3, [1, 2, 3], FieldConfig("quadratic", 2))


@given(group_elements(Z2_QUAD))
def test_pairing_vanishes_only_at_zero(x):
    assert bool(Z2_QUAD.pairing(x)) is not x.is_zero()


@given(group_elements(Z), group_elements(Z))
def test_pairing_is_additive(x, y):
    assert Z.pairing(x + y) == Z.pairing(x) + Z.pairing(y)
