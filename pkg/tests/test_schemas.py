from fractions import Fraction

import pytest

from hv_algebra.errors import FieldError
from hv_algebra.groups import pairing_eval
from hv_algebra.scalars import FieldConfig
from hv_algebra.schemas import GroupModel, RunConfigModel
from hv_algebra.suites import quadratic_reference_group

QUADRATIC_Z2 = {
    "group": "Z2",
    "pairing": [["1", "0"], ["0", "1"]],
    "field": {"mode": "quadratic", "d": 2},
}


def test_pairing_parts_build_quadratic_group():
    g = RunConfigModel.model_validate(QUADRATIC_Z2).to_group()
    assert g == quadratic_reference_group()
    assert pairing_eval(g, g.element(0, 1)) == FieldConfig("quadratic", 2).sqrt()
    assert pairing_eval(g, g.element(2, 0)) == 2


def test_pairing_parts_mix_with_plain_scalars():
    g = GroupModel.model_validate(
        {"group": "Z2", "pairing": [1, ["1/2", 3]], "field": {"mode": "quadratic", "d": 2}}
    ).to_group()
    sqrt2 = FieldConfig("quadratic", 2).sqrt()
    assert g.pairing_values[1] == sqrt2 * 3 + Fraction(1, 2)
    assert pairing_eval(g, g.element(1, 0)) == 1


def test_radical_part_needs_quadratic_field():
    model = GroupModel.model_validate({"group": "Z", "pairing": [["1", "1"]]})
    with pytest.raises(FieldError):
        model.to_group()


def test_pairing_arity_checked():
    with pytest.raises(ValueError, match="needs 2 pairing"):
        GroupModel.model_validate({"group": "Z2", "pairing": [["1", "0"]]})
