import pytest

from hv_algebra.elements import AlgebraElement, AlgebraTag
from hv_algebra.groups import GroupKind, default_group, make_group
from hv_algebra.parser import parse_element
from hv_algebra.sampling import Sampler
from hv_algebra.suites import quadratic_reference_group


@pytest.fixture(scope="session")
def z():
    """Z with ∂(m) = m."""
    return default_group()


@pytest.fixture(scope="session")
def z2():
    """Z² with ∂(m, n) = m + n√2 over Q(√2)."""
    return quadratic_reference_group()


@pytest.fixture(scope="session")
def q():
    return make_group(GroupKind.Q, [1])


@pytest.fixture
def sampler(z):
    return Sampler(z, 1234)


@pytest.fixture
def parse(z):
    """Parse text on Z; the tag defaults to D1."""

    def _parse(text: str, tag: AlgebraTag | str = AlgebraTag.D1, group=None) -> AlgebraElement:
        return parse_element(text, group or z, tag)

    return _parse
