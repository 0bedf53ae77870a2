import pytest
from hypothesis import given

from hv_algebra.elements import C_LI, AlgebraElement, AlgebraTag, D, I, L
from hv_algebra.errors import ArityError, ExpressionSyntaxError, HVError, TagError
from hv_algebra.groups import GroupKind, make_group
from hv_algebra.parser import format_element, parse_element
from hv_algebra.suites import quadratic_reference_group

from .strategies import elements

Z = make_group(GroupKind.Z, [1])
Z2_QUAD = quadratic_reference_group()


def test_parse_terms(z):
    u = parse_element("3*L(2) - 1/2*I(-1) + C_LI", z, "HV")
    assert u == AlgebraElement.build(
        AlgebraTag.HV, z, [(L(z.element(2)), 3), (I(z.element(-1)), "-1/2"), (C_LI, 1)]
    )


def test_parse_diffop(z):
    u = parse_element("D(2;3) - D(0;0)", z, "D")
    assert u.coefficient(D(z.element(2), 3)) == 1
    assert u.coefficient(D(z.element(0), 0)) == -1


def test_like_terms_merge(parse):
    assert parse("L(1) + L(1) - 2*L(1)").is_zero()
    assert str(parse("0")) == "0"


def test_bare_scalar_is_unit(parse):
    assert parse("2") == parse("2*I(0)")
    assert parse("1/3", "D") == parse("1/3*D(0;0)", "D")
    with pytest.raises(TagError):
        parse("2", "W")


def test_parenthesized_scalars(z2):
    u = parse_element("(1 + sqrt(2))*L(1,0)", z2, "W")
    assert u.coefficient(L(z2.element(1, 0))) == z2.scalar(1) + z2.field.sqrt()


def test_sqrt_needs_matching_field(z):
    with pytest.raises(HVError, match="sqrt"):
        parse_element("sqrt(2)*L(1)", z, "W")


def test_syntax_error_offset(z):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_element("L(2) +", z, "D1")
    assert exc.value.offset == 7
    assert exc.value.detail == {"offset": 7, "text": "L(2) +"}


def test_wrong_arity(z2):
    with pytest.raises(ArityError):
        parse_element("L(1)", z2, "W")


def test_symbol_not_admissible(z):
    with pytest.raises(TagError):
        parse_element("I(1)", z, "W")
    with pytest.raises(TagError):
        parse_element("C_L", z, "D1")


def test_products_of_elements_rejected(z):
    with pytest.raises(TagError):
        parse_element("L(1)*L(2)", z, "W")


def test_rational_coordinates_on_q(q):
    u = parse_element("L(1/2) - I(-3/4)", q, "D1")
    assert str(u) == "L(1/2) - I(-3/4)"


def test_format_order(parse):
    assert str(parse("C_L + L(0) - 4*I(2)", "HV")) == "L(0) - 4*I(2) + C_L"


@given(elements(Z, AlgebraTag.HV))
def test_text_round_trip(u):
    assert parse_element(format_element(u), Z, "HV") == u


@given(elements(Z2_QUAD, AlgebraTag.D1))
def test_text_round_trip_quadratic(u):
    assert parse_element(format_element(u), Z2_QUAD, "D1") == u


def test_coordinate_sign_may_be_spaced(z):
    assert parse_element("L( - 2 )", z, "W") == parse_element("L(-2)", z, "W")
    assert parse_element("L( + 3 )", z, "W") == parse_element("L(3)", z, "W")


def test_spaced_coordinates_on_rank_two():
    u = parse_element("I(1 , -3)", Z2_QUAD, "D1")
    assert u == AlgebraElement.basis(AlgebraTag.D1, Z2_QUAD, I(Z2_QUAD.element(1, -3)))


def test_spaced_leading_sign(z):
    assert parse_element("- 2/3 * L(1)", z, "W") == parse_element("-2/3*L(1)", z, "W")
