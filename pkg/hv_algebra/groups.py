"""Grading groups A, the pairing ∂, characters, additive maps and the scaling set ℰ."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Sequence

import sympy

from hv_algebra.errors import (
    ArityError,
    CharacterError,
    DegeneratePairingError,
    EpsilonError,
    GroupMismatchError,
)
from hv_algebra.scalars import ONE, ZERO, FieldConfig, Scalar, ScalarLike, as_scalar


class GroupKind(str, Enum):
    Z = "Z"
    Z2 = "Z2"
    Z3 = "Z3"
    Z4 = "Z4"
    Q = "Q"

    @property
    def rank(self) -> int:
        return {"Z": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Q": 1}[self.value]


@dataclass(frozen=True, slots=True, order=True)
class GroupElement:
    """Integer coordinates for Z^n, a single ``Fraction`` for Q."""

    coords: tuple

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scale(self, eps: Fraction) -> "GroupElement":
        """ε·x; on a lattice the result must stay integral."""
        out = []
        for a in self.coords:
            value = Fraction(eps) * a
            if isinstance(a, int):
                if value.denominator != 1:
                    raise EpsilonError(f"{eps}·({self}) leaves the lattice")
                value = int(value)
            out.append(value)
        return GroupElement(tuple(out))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coords)


@dataclass(frozen=True)
class GroupInstance:
    """An abelian group A ∈ {Z, Z^n, Q} with ∂ given on generators.

    Construction does not check nondegeneracy; use :func:`make_group` for a
    validated instance.
    """

    kind: GroupKind
    pairing_values: tuple[Scalar, ...]
    field: FieldConfig = FieldConfig()

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GroupKind(self.kind))
        if len(self.pairing_values) != self.kind.rank:
            raise ArityError(
                f"group {self.kind.value} needs {self.kind.rank} pairing values, "
                f"got {len(self.pairing_values)}"
            )
        values = tuple(self.field.scalar(v) for v in self.pairing_values)
        object.__setattr__(self, "pairing_values", values)

    @property
    def rank(self) -> int:
        return self.kind.rank

    def zero(self) -> GroupElement:
        if self.kind is GroupKind.Q:
            return GroupElement((Fraction(0),))
        return GroupElement((0,) * self.rank)

    def generators(self) -> list[GroupElement]:
        if self.kind is GroupKind.Q:
            return [GroupElement((Fraction(1),))]
        return [
            GroupElement(tuple(1 if i == j else 0 for j in range(self.rank)))
            for i in range(self.rank)
        ]

    def element(self, *coords: int | Fraction | str) -> GroupElement:
        """Build an element, checking arity and coordinate type."""
        if len(coords) != self.rank:
            raise ArityError(
                f"group {self.kind.value} elements have {self.rank} coordinate(s), "
                f"got {len(coords)}"
            )
        if self.kind is GroupKind.Q:
            return GroupElement((Fraction(coords[0]),))
        out = []
        for c in coords:
            value = Fraction(c)
            if value.denominator != 1:
                raise ArityError(f"coordinate {c} is not an integer in {self.kind.value}")
            out.append(int(value))
        return GroupElement(tuple(out))

    def check(self, x: GroupElement) -> GroupElement:
        if len(x.coords) != self.rank:
            raise ArityError(f"{x} has the wrong arity for {self.kind.value}")
        return x

    def pairing(self, x: GroupElement) -> Scalar:
        return pairing_eval(self, x)

    def base_point(self) -> GroupElement:
        """First generator x₀ with ∂(x₀) ≠ 0."""
        for gen in self.generators():
            if self.pairing(gen):
                return gen
        raise DegeneratePairingError("∂ vanishes on every generator")

    def probe_points(self) -> list[GroupElement]:
        """0 and ±e_i, ±2e_i for each generator e_i."""
        points = [self.zero()]
        for gen in self.generators():
            points.extend([gen, -gen, 2 * gen, -(2 * gen)])
        return points

    def scalar(self, value: ScalarLike | str) -> Scalar:
        return self.field.scalar(value)

    def require_same(self, other: "GroupInstance") -> None:
        if other is not self and other != self:
            raise GroupMismatchError("operands live on different group instances")

    def to_data(self) -> dict:
        return {
            "group": self.kind.value,
            "pairing": [str(v) for v in self.pairing_values],
            "field": self.field.to_data(),
        }


def make_group(
    kind: GroupKind | str,
    pairing: Sequence[ScalarLike | str],
    field: FieldConfig | None = None,
) -> GroupInstance:
    """Build a group instance and reject degenerate pairings."""
    g = GroupInstance(GroupKind(kind), tuple(as_scalar(v) for v in pairing), field or FieldConfig())
    witness = degeneracy_witness(g)
    if witness is not None:
        raise DegeneratePairingError(
            f"pairing is degenerate: ∂({witness}) = 0", detail={"witness": str(witness)}
        )
    return g


def default_group() -> GroupInstance:
    """A = Z with ∂(m) = m."""
    return make_group(GroupKind.Z, [1])


@lru_cache(maxsize=1 << 16)
def pairing_eval(g: GroupInstance, x: GroupElement) -> Scalar:
    g.check(x)
    total = ZERO
    for coord, value in zip(x.coords, g.pairing_values):
        if coord:
            total = total + value * coord
    return g.field.scalar(total)


def degeneracy_witness(g: GroupInstance) -> GroupElement | None:
    """A nonzero x with ∂(x) = 0, or None when ∂ is nondegenerate."""
    if g.rank == 1:
        return None if g.pairing_values[0] else g.generators()[0]
    rows = [
        [sympy.Rational(v.rational.numerator, v.rational.denominator) for v in g.pairing_values],
        [sympy.Rational(v.radical.numerator, v.radical.denominator) for v in g.pairing_values],
    ]
    null = sympy.Matrix(rows).nullspace()
    if not null:
        return None
    vec = null[0]
    den = reduce(lcm, (int(sympy.fraction(entry)[1]) for entry in vec), 1)
    ints = [int(entry * den) for entry in vec]
    common = reduce(gcd, ints, 0) or 1
    return GroupElement(tuple(i // common for i in ints))


def verify_nondegenerate(g: GroupInstance) -> bool:
    return degeneracy_witness(g) is None


def epsilon_in_E(g: GroupInstance, e: ScalarLike | str) -> bool:
    """Whether ε·A = A."""
    eps = as_scalar(e)
    if not eps:
        raise EpsilonError("ε must be nonzero")
    if not eps.is_rational:
        raise EpsilonError(f"ε = {eps} is not rational, so it cannot rescale A")
    if g.kind is GroupKind.Q:
        return True
    return eps.rational in (1, -1)


@dataclass(frozen=True)
class Character:
    """A homomorphism A → F*, given on generators (only χ ≡ 1 on Q)."""

    group: GroupInstance
    generator_images: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        images = tuple(self.group.scalar(v) for v in self.generator_images)
        if len(images) != self.group.rank:
            raise ArityError(f"character needs {self.group.rank} generator image(s)")
        if any(not v for v in images):
            raise CharacterError("character values must be nonzero")
        if self.group.kind is GroupKind.Q and any(v != ONE for v in images):
            raise CharacterError("only the trivial character is representable on Q")
        object.__setattr__(self, "generator_images", images)

    @classmethod
    def trivial(cls, group: GroupInstance) -> "Character":
        return cls(group, (ONE,) * group.rank)

    @property
    def is_trivial(self) -> bool:
        return all(v == ONE for v in self.generator_images)

    def __call__(self, x: GroupElement) -> Scalar:
        return character_eval(self, x)

    def __mul__(self, other: "Character") -> "Character":
        self.group.require_same(other.group)
        return Character(
            self.group, tuple(a * b for a, b in zip(self.generator_images, other.generator_images))
        )

    def inverse(self) -> "Character":
        return Character(self.group, tuple(v.inverse() for v in self.generator_images))

    def precompose(self, eps: Scalar) -> "Character":
        """χ∘ε : x ↦ χ(εx)."""
        factor = eps.to_fraction()
        return Character(
            self.group, tuple(self(gen.scale(factor)) for gen in self.group.generators())
        )


@dataclass(frozen=True)
class AdditiveMap:
    """An additive map μ: A → F; on Q it is x ↦ c·x."""

    group: GroupInstance
    generator_images: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        images = tuple(self.group.scalar(v) for v in self.generator_images)
        if len(images) != self.group.rank:
            raise ArityError(f"additive map needs {self.group.rank} generator image(s)")
        object.__setattr__(self, "generator_images", images)

    @classmethod
    def zero(cls, group: GroupInstance) -> "AdditiveMap":
        return cls(group, (ZERO,) * group.rank)

    @classmethod
    def pairing(cls, group: GroupInstance) -> "AdditiveMap":
        return cls(group, group.pairing_values)

    def __call__(self, x: GroupElement) -> Scalar:
        return additive_eval(self, x)

    def __add__(self, other: "AdditiveMap") -> "AdditiveMap":
        self.group.require_same(other.group)
        return AdditiveMap(
            self.group, tuple(a + b for a, b in zip(self.generator_images, other.generator_images))
        )

    def scale(self, k: ScalarLike) -> "AdditiveMap":
        return AdditiveMap(self.group, tuple(v * k for v in self.generator_images))

    def pairing_multiple(self) -> Scalar | None:
        """k with μ = k∂, if any."""
        base = self.group.base_point()
        k = self(base) / self.group.pairing(base)
        if all(self(gen) == k * self.group.pairing(gen) for gen in self.group.generators()):
            return k
        return None


def character_eval(chi: Character, x: GroupElement) -> Scalar:
    chi.group.check(x)
    if chi.group.kind is GroupKind.Q:
        return ONE
    value = ONE
    for coord, image in zip(x.coords, chi.generator_images):
        if coord:
            value = value * image**coord
    return chi.group.scalar(value)


def additive_eval(mu: AdditiveMap, x: GroupElement) -> Scalar:
    mu.group.check(x)
    total = ZERO
    for coord, image in zip(x.coords, mu.generator_images):
        if coord:
            total = total + image * coord
    return mu.group.scalar(total)
