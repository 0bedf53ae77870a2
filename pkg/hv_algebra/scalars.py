"""Exact scalars: reduced rationals and elements of a quadratic field Q(sqrt d)."""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import sympy

from hv_algebra.errors import FieldError

_SCALAR_RE = re.compile(
    r"^\s*(?P<rat>[+-]?\d+(?:/\d+)?)"
    r"(?:\s*(?P<sign>[+-])\s*(?P<rad>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


@dataclass(frozen=True, slots=True, eq=False)
class Scalar:
    """``rational + radical * sqrt(d)``; ``d is None`` means the rational field.

    Both parts are ``Fraction`` so the representation is reduced with a
    positive denominator, and equality is structural.
    """

    rational: Fraction = Fraction(0)
    radical: Fraction = Fraction(0)
    d: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.rational, Fraction):
            object.__setattr__(self, "rational", Fraction(self.rational))
        if not isinstance(self.radical, Fraction):
            object.__setattr__(self, "radical", Fraction(self.radical))
        if self.d is None and self.radical:
            raise FieldError("a nonzero sqrt part needs a quadratic field")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"p/q"`` or ``"p/q+r/s*sqrt(d)"``."""
        match = _SCALAR_RE.match(text)
        if match is None:
            raise FieldError(f"not a scalar literal: {text!r}")
        rational = Fraction(match["rat"])
        if match["rad"] is None:
            return cls(rational)
        radical = Fraction(match["rad"])
        if match["sign"] == "-":
            radical = -radical
        return cls(rational, radical, int(match["d"]))

    @property
    def is_rational(self) -> bool:
        return self.radical == 0

    def to_fraction(self) -> Fraction:
        if self.radical:
            raise FieldError(f"{self} is not rational")
        return self.rational

    def conjugate(self) -> "Scalar":
        return _make(self.rational, -self.radical, self.d)

    def norm(self) -> Fraction:
        return (self * self.conjugate()).rational

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.radical:
            return _make(1 / self.rational, Fraction(0), self.d)
        n = self.norm()
        return _make(self.rational / n, -self.radical / n, self.d)

    def __bool__(self) -> bool:
        return bool(self.rational) or bool(self.radical)

    def __neg__(self) -> "Scalar":
        return _make(-self.rational, -self.radical, self.d)

    def __add__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.rational + o.rational, self.radical + o.radical, _join(self, o))

    __radd__ = __add__

    def __sub__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.rational - o.rational, self.radical - o.radical, _join(self, o))

    def __rsub__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        d = _join(self, o)
        if not self.radical and not o.radical:
            return _make(self.rational * o.rational, Fraction(0), d)
        rational = self.rational * o.rational + (d or 0) * self.radical * o.radical
        radical = self.rational * o.radical + self.radical * o.rational
        return _make(rational, radical, d)

    __rmul__ = __mul__

    def __truediv__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "ScalarLike") -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = _make(Fraction(1), Fraction(0), self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            if self.rational != other.rational or self.radical != other.radical:
                return False
            return not self.radical or self.d == other.d
        if isinstance(other, (int, Fraction)):
            return not self.radical and self.rational == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.radical:
            return hash(self.rational)
        return hash((self.rational, self.radical, self.d))

    def __str__(self) -> str:
        if not self.radical:
            return str(self.rational)
        sign = "+" if self.radical > 0 else "-"
        return f"{self.rational}{sign}{abs(self.radical)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


ScalarLike = Union[Scalar, int, Fraction]

ZERO = Scalar()
ONE = Scalar(Fraction(1))


def _make(rational: Fraction, radical: Fraction, d: int | None) -> Scalar:
    out = object.__new__(Scalar)
    object.__setattr__(out, "rational", rational)
    object.__setattr__(out, "radical", radical)
    object.__setattr__(out, "d", d)
    return out


def _coerce(value: object) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return _make(Fraction(value), Fraction(0), None)
    return None


def _join(a: Scalar, b: Scalar) -> int | None:
    if a.d is None:
        return b.d
    if b.d is None or b.d == a.d:
        return a.d
    raise FieldError(f"cannot mix Q(sqrt {a.d}) and Q(sqrt {b.d})")


def as_scalar(value: ScalarLike | str) -> Scalar:
    if isinstance(value, str):
        return Scalar.parse(value)
    out = _coerce(value)
    if out is None:
        raise FieldError(f"not a scalar: {value!r}")
    return out


@dataclass(frozen=True)
class FieldConfig:
    """The scalar field: Q, or Q(sqrt d) for a squarefree d > 1."""

    mode: Literal["rational", "quadratic"] = "rational"
    d: int | None = None

    def __post_init__(self) -> None:
        if self.mode == "rational":
            if self.d is not None:
                raise FieldError("rational field takes no d")
            return
        if self.mode != "quadratic":
            raise FieldError(f"unknown field mode {self.mode!r}")
        if self.d is None or self.d < 2:
            raise FieldError("quadratic field needs an integer d >= 2")
        if any(exp > 1 for exp in sympy.factorint(self.d).values()):
            raise FieldError(f"d={self.d} is not squarefree")

    @property
    def is_quadratic(self) -> bool:
        return self.mode == "quadratic"

    def scalar(self, value: ScalarLike | str) -> Scalar:
        """Coerce into this field, rejecting a foreign sqrt."""
        s = as_scalar(value)
        if s.radical and s.d != self.d:
            raise FieldError(f"{s} does not belong to {self.describe()}")
        return _make(s.rational, s.radical, self.d)

    def sqrt(self) -> Scalar:
        if not self.is_quadratic:
            raise FieldError("sqrt is only available in a quadratic field")
        return _make(Fraction(0), Fraction(1), self.d)

    def describe(self) -> str:
        return f"Q(sqrt {self.d})" if self.is_quadratic else "Q"

    def to_data(self) -> dict:
        if self.is_quadratic:
            return {"mode": "quadratic", "d": self.d}
        return {"mode": "rational"}
