"""Seeded random inputs for the property suites.

Streams come from numpy's counter-based Philox bit generator; independent
batches are spawned from one ``SeedSequence`` so a (seed, batch) pair
reproduces every witness exactly.
"""

from fractions import Fraction
from typing import Sequence

import numpy as np

from hv_algebra.elements import (
    C_I,
    C_L,
    C_LI,
    AlgebraElement,
    AlgebraTag,
    BasisSymbol,
    D,
    I,
    L,
)
from hv_algebra.groups import (
    AdditiveMap,
    Character,
    GroupElement,
    GroupInstance,
    GroupKind,
)
from hv_algebra.scalars import Scalar

SEED_ALGORITHM = "numpy-philox4x64/seedsequence"

COEFFICIENTS = tuple(
    Fraction(v)
    for v in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3))
)


class Sampler:
    """Draws scalars, group elements, algebra elements and morphism parameters."""

    def __init__(
        self,
        group: GroupInstance,
        seed: int | np.random.SeedSequence = 0,
        *,
        radius: int = 3,
        max_support: int = 4,
        max_power: int = 3,
    ) -> None:
        self.group = group
        self.seed_sequence = (
            seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
        )
        self.rng = np.random.Generator(np.random.Philox(self.seed_sequence))
        self.radius = radius
        self.max_support = max_support
        self.max_power = max_power

    def spawn(self, n: int) -> list["Sampler"]:
        """Independent child samplers, one per batch."""
        return [
            Sampler(
                self.group,
                child,
                radius=self.radius,
                max_support=self.max_support,
                max_power=self.max_power,
            )
            for child in self.seed_sequence.spawn(n)
        ]

    def integer(self, lo: int, hi: int) -> int:
        return int(self.rng.integers(lo, hi, endpoint=True))

    def choice(self, items: Sequence):
        return items[self.integer(0, len(items) - 1)]

    def coefficient(self) -> Scalar:
        return self.group.scalar(self.choice(COEFFICIENTS))

    def scalar(self, *, nonzero: bool = False) -> Scalar:
        """A small rational, with a random sqrt part in a quadratic field."""
        while True:
            value = self.group.scalar(Fraction(self.integer(-6, 6), self.integer(1, 4)))
            if self.group.field.is_quadratic and self.integer(0, 1):
                radical = Fraction(self.integer(-3, 3), self.integer(1, 3))
                value = value + self.group.field.sqrt() * radical
            if value or not nonzero:
                return value

    def rational(self, *, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(self.integer(-6, 6), self.integer(1, 4))
            if value or not nonzero:
                return value

    def group_element(self, radius: int | None = None, *, nonzero: bool = False) -> GroupElement:
        r = self.radius if radius is None else radius
        while True:
            if self.group.kind is GroupKind.Q:
                x = self.group.element(Fraction(self.integer(-r * 2, r * 2), self.integer(1, 2)))
            else:
                x = self.group.element(*(self.integer(-r, r) for _ in range(self.group.rank)))
            if not nonzero or not x.is_zero():
                return x

    def symbol(self, tag: AlgebraTag) -> BasisSymbol:
        tag = AlgebraTag(tag)
        x = self.group_element()
        if tag is AlgebraTag.W:
            return L(x)
        if tag is AlgebraTag.D:
            return D(x, self.integer(0, self.max_power))
        if tag is AlgebraTag.HV and self.integer(0, 7) == 0:
            return self.choice((C_L, C_I, C_LI))
        return L(x) if self.integer(0, 1) else I(x)

    def element(self, tag: AlgebraTag, support: int | None = None) -> AlgebraElement:
        """Random support of size ≤ max_support, coefficients from COEFFICIENTS."""
        size = self.integer(1, self.max_support) if support is None else support
        terms = [(self.symbol(tag), self.coefficient()) for _ in range(size)]
        return AlgebraElement.build(tag, self.group, terms)

    def homogeneous(self, tag: AlgebraTag, degree: GroupElement) -> AlgebraElement:
        tag = AlgebraTag(tag)
        terms = []
        for _ in range(self.integer(1, 2)):
            if tag is AlgebraTag.W:
                sym = L(degree)
            elif tag is AlgebraTag.D:
                sym = D(degree, self.integer(0, self.max_power))
            else:
                sym = L(degree) if self.integer(0, 1) else I(degree)
            terms.append((sym, self.coefficient()))
        return AlgebraElement.build(tag, self.group, terms)

    def character(self) -> Character:
        if self.group.kind is GroupKind.Q:
            return Character.trivial(self.group)
        images = [self.choice(COEFFICIENTS) for _ in range(self.group.rank)]
        return Character(self.group, tuple(self.group.scalar(v) for v in images))

    def additive_map(self) -> AdditiveMap:
        return AdditiveMap(self.group, tuple(self.scalar() for _ in range(self.group.rank)))

    def epsilon(self) -> Scalar:
        if self.group.kind is GroupKind.Q:
            return self.group.scalar(self.rational(nonzero=True))
        return self.group.scalar(self.choice((1, -1)))
