"""Hypothesis strategies for scalars, group elements and algebra elements."""

from fractions import Fraction

from hypothesis import strategies as st

from hv_algebra.elements import C_I, C_L, C_LI, AlgebraElement, AlgebraTag, D, I, L
from hv_algebra.groups import GroupElement, GroupInstance, GroupKind
from hv_algebra.scalars import FieldConfig, Scalar

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def scalars(field: FieldConfig = FieldConfig(), *, nonzero: bool = False) -> st.SearchStrategy:
    if field.is_quadratic:
        base = st.builds(
            lambda r, s: field.scalar(r) + field.sqrt() * s, small_fractions, small_fractions
        )
    else:
        base = small_fractions.map(field.scalar)
    return base.filter(bool) if nonzero else base


def group_elements(group: GroupInstance, radius: int = 4) -> st.SearchStrategy:
    if group.kind is GroupKind.Q:
        return st.fractions(min_value=-radius, max_value=radius, max_denominator=4).map(
            lambda f: GroupElement((Fraction(f),))
        )
    coord = st.integers(-radius, radius)
    return st.tuples(*([coord] * group.rank)).map(GroupElement)


def symbols(group: GroupInstance, tag: AlgebraTag) -> st.SearchStrategy:
    xs = group_elements(group)
    if tag is AlgebraTag.W:
        return xs.map(L)
    if tag is AlgebraTag.D:
        return st.builds(D, xs, st.integers(0, 3))
    out = st.one_of(xs.map(L), xs.map(I))
    if tag is AlgebraTag.HV:
        out = st.one_of(out, st.sampled_from([C_L, C_I, C_LI]))
    return out


def elements(group: GroupInstance, tag: AlgebraTag, max_terms: int = 4) -> st.SearchStrategy:
    terms = st.lists(
        st.tuples(symbols(group, tag), scalars(group.field)), min_size=0, max_size=max_terms
    )
    return terms.map(lambda ts: AlgebraElement.build(tag, group, ts))


def scalar_pairs(field: FieldConfig = FieldConfig()) -> st.SearchStrategy[tuple[Scalar, Scalar]]:
    return st.tuples(scalars(field), scalars(field))
