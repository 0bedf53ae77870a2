import pytest
from hypothesis import given, settings

import hv_algebra.brackets as brackets
from hv_algebra.brackets import (
    commutator,
    diffop_product,
    grade_components,
    hv_bracket,
    jacobi_defect,
    lie_bracket,
    project_to_d1,
    witt_bracket,
)
from hv_algebra.elements import C_L, AlgebraElement, AlgebraTag, retag
from hv_algebra.errors import PowerCapError, TagError
from hv_algebra.groups import GroupKind, make_group
from hv_algebra.suites import quadratic_reference_group

from .strategies import elements

Z = make_group(GroupKind.Z, [1])
Z2_QUAD = quadratic_reference_group()


def test_witt_on_z(parse):
    assert witt_bracket(parse("L(1)", "W"), parse("L(2)", "W")) == parse("L(3)", "W")


def test_witt_on_z2(z2, parse):
    out = witt_bracket(parse("L(1,0)", "W", z2), parse("L(0,1)", "W", z2))
    assert out == parse("(sqrt(2) - 1)*L(1,1)", "W", z2)
    assert str(out) == "(-1+1*sqrt(2))*L(1,1)"


def test_diffop_products(parse):
    assert diffop_product(parse("D(1;1)", "D"), parse("D(2;1)", "D")) == parse(
        "D(3;2) + 2*D(3;1)", "D"
    )
    assert diffop_product(parse("D(0;1)", "D"), parse("D(2;1)", "D")) == parse(
        "D(2;2) + 2*D(2;1)", "D"
    )


def test_power_cap(parse):
    with pytest.raises(PowerCapError):
        diffop_product(parse("D(0;3)", "D"), parse("D(0;3)", "D"), max_power=5)


def test_commutators_in_d1(parse):
    assert commutator(parse("L(1)"), parse("I(2)")) == parse("2*I(3)")
    assert commutator(parse("L(1)"), parse("L(2)")) == parse("L(3)")
    assert commutator(parse("I(1)"), parse("I(4)")).is_zero()


def test_hv_brackets(parse):
    assert str(hv_bracket(parse("L(2)", "HV"), parse("L(-2)", "HV"))) == "-4*L(0) + 1/2*C_L"
    assert hv_bracket(parse("L(1)", "HV"), parse("I(-1)", "HV")) == parse("-I(0)", "HV")
    assert hv_bracket(parse("I(3)", "HV"), parse("I(-3)", "HV")) == parse("-3*C_I", "HV")


def test_center_is_central(parse):
    c = parse("C_L + C_I - C_LI", "HV")
    assert hv_bracket(c, parse("L(2) + I(-1)", "HV")).is_zero()


def test_tag_mismatch(parse):
    with pytest.raises(TagError):
        lie_bracket(parse("L(1)", "W"), parse("L(1)"))
    with pytest.raises(TagError):
        witt_bracket(parse("L(1)"), parse("L(2)"))


def test_grade_components(parse):
    u = parse("L(1) + 2*I(1) + C_L", "HV")
    parts = grade_components(u)
    assert parts == {
        Z.element(0): AlgebraElement.basis(AlgebraTag.HV, Z, C_L),
        Z.element(1): parse("L(1) + 2*I(1)", "HV"),
    }


def test_project_to_d1(parse):
    assert project_to_d1(parse("L(2) - I(1) + 3*C_LI", "HV")) == parse("L(2) - I(1)")
    with pytest.raises(TagError):
        project_to_d1(parse("L(2)"))


def test_d1_embeds_in_d(parse):
    u, v = parse("L(1) + I(-2)"), parse("2*L(3) - I(1)")
    lifted = commutator(retag(u, AlgebraTag.D), retag(v, AlgebraTag.D))
    assert retag(lifted, AlgebraTag.D1) == commutator(u, v)


@given(elements(Z, AlgebraTag.W), elements(Z, AlgebraTag.W), elements(Z, AlgebraTag.W))
def test_witt_jacobi(u, v, w):
    assert jacobi_defect(u, v, w).is_zero()


@given(elements(Z, AlgebraTag.HV), elements(Z, AlgebraTag.HV), elements(Z, AlgebraTag.HV))
def test_hv_jacobi(u, v, w):
    assert jacobi_defect(u, v, w).is_zero()


@settings(max_examples=50)
@given(
    elements(Z2_QUAD, AlgebraTag.HV),
    elements(Z2_QUAD, AlgebraTag.HV),
    elements(Z2_QUAD, AlgebraTag.HV),
)
def test_hv_jacobi_over_quadratic_field(u, v, w):
    assert jacobi_defect(u, v, w).is_zero()


@given(elements(Z, AlgebraTag.D), elements(Z, AlgebraTag.D), elements(Z, AlgebraTag.D))
def test_diffop_product_is_associative(u, v, w):
    assert diffop_product(diffop_product(u, v), w) == diffop_product(u, diffop_product(v, w))


@given(elements(Z, AlgebraTag.HV), elements(Z, AlgebraTag.HV))
def test_hv_bracket_is_antisymmetric(u, v):
    assert (hv_bracket(u, v) + hv_bracket(v, u)).is_zero()


def test_repeated_brackets_reuse_symbol_products(parse):
    u = parse("3*L(7) - I(5) + C_LI", "HV")
    v = parse("L(-4) + 2*I(9)", "HV")
    first = hv_bracket(u, v)
    hits = brackets._hv_rule.cache_info().hits
    assert hv_bracket(u, v) == first
    assert brackets._hv_rule.cache_info().hits > hits


def test_power_cap_raises_on_every_call(parse):
    u, v = parse("D(1;4)", "D"), parse("D(2;4)", "D")
    for _ in range(2):
        with pytest.raises(PowerCapError):
            diffop_product(u, v, max_power=7)
    assert diffop_product(u, v, max_power=8) == diffop_product(u, v, max_power=9)
