from fractions import Fraction

import pytest
from hypothesis import given

from hv_algebra.errors import FieldError
from hv_algebra.scalars import ONE, ZERO, FieldConfig, Scalar, as_scalar

from .strategies import scalar_pairs, scalars

Q_SQRT2 = FieldConfig("quadratic", 2)


def test_parse_rational_and_quadratic():
    assert Scalar.parse("3/4") == Fraction(3, 4)
    s = Scalar.parse("1/2+3*sqrt(2)")
    assert s.rational == Fraction(1, 2)
    assert s.radical == 3
    assert s.d == 2
    assert not s.is_rational


def test_rational_scalar_compares_with_int():
    assert Scalar(Fraction(2)) == 2
    assert ONE - ONE == ZERO
    assert as_scalar(Fraction(4, 2)) == 2


def test_sqrt_squared_is_rational():
    r = Q_SQRT2.sqrt()
    assert r * r == 2
    assert (r * r).is_rational


def test_str_forms():
    assert str(Scalar(Fraction(-1, 2))) == "-1/2"
    assert str(Q_SQRT2.scalar(1) + Q_SQRT2.sqrt()) == "1+1*sqrt(2)"


def test_foreign_sqrt_rejected():
    with pytest.raises(FieldError):
        FieldConfig("quadratic", 3).scalar(Q_SQRT2.sqrt())
    with pytest.raises(FieldError):
        FieldConfig().sqrt()


@pytest.mark.parametrize("d", [0, 1, 4, 12])
def test_quadratic_field_needs_squarefree_d(d):
    with pytest.raises(FieldError):
        FieldConfig("quadratic", d)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars(Q_SQRT2, nonzero=True))
def test_inverse(s):
    assert s * s.inverse() == ONE


@given(scalar_pairs(Q_SQRT2))
def test_norm_is_multiplicative(pair):
    a, b = pair
    assert (a * b).norm() == a.norm() * b.norm()


@given(scalar_pairs(Q_SQRT2))
def test_field_operations_commute(pair):
    a, b = pair
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
