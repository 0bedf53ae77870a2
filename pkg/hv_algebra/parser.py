"""Text form of algebra elements: a pyparsing grammar, an AST and the printer.

Grammar::

    element := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := ('-' | '+') factor | atom
    atom    := symbol | rational | 'sqrt(' int ')' | '(' element ')'
    symbol  := ('L' | 'I') '(' coords ')' | 'D' '(' coords ';' nat ')' | 'C_L' | 'C_I' | 'C_LI'

Coordinates are comma-separated integers on Z^n and one rational on Q.
A bare scalar term c means c·t⁰.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import pyparsing as pp

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
from hv_algebra.errors import ExpressionSyntaxError, HVError, TagError
from hv_algebra.groups import GroupInstance
from hv_algebra.scalars import Scalar


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Sqrt:
    d: int
    offset: int


@dataclass(frozen=True)
class Symbol:
    name: str
    coords: tuple[str, ...] = ()
    power: int | None = None
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "ElementExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: "ElementExpr"
    rhs: "ElementExpr"


ElementExpr = Union[Number, Sqrt, Symbol, Neg, BinOp]
Value = Union[Scalar, AlgebraElement]

_CENTRAL = {"C_L": C_L, "C_I": C_I, "C_LI": C_LI}


def _fold(toks: pp.ParseResults) -> ElementExpr:
    items = list(toks)
    node = items[0]
    for op, rhs in zip(items[1::2], items[2::2]):
        node = BinOp(op, node, rhs)
    return node


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    lpar, rpar, comma, semi = map(pp.Suppress, "(),;")
    number = pp.Regex(r"\d+(?:/\d+)?")
    # a coordinate sign may stand apart from its digits: L( - 2 )
    signed = pp.Opt(pp.one_of("+ -"), default="+") + pp.Regex(r"\d+(?:/\d+)?")
    natural = pp.Word(pp.nums)
    coords = pp.Group(signed + pp.ZeroOrMore(comma - signed))

    central = pp.Regex(r"C_LI|C_L|C_I")
    li_symbol = pp.Regex(r"[LI]") + lpar - coords + rpar
    d_symbol = pp.Literal("D") + lpar - coords + semi + natural + rpar
    sqrt = pp.Literal("sqrt") + lpar - natural + rpar

    element = pp.Forward()
    factor = pp.Forward()
    atom = central | d_symbol | li_symbol | sqrt | number | (lpar - element + rpar)
    factor <<= (pp.one_of("- +") + factor) | atom
    term = factor + pp.ZeroOrMore(pp.Literal("*") - factor)
    element <<= term + pp.ZeroOrMore(pp.one_of("+ -") - term)

    central.set_parse_action(lambda s, loc, t: Symbol(t[0], offset=loc))
    li_symbol.set_parse_action(lambda s, loc, t: Symbol(t[0], tuple(t[1]), offset=loc))
    d_symbol.set_parse_action(lambda s, loc, t: Symbol("D", tuple(t[1]), int(t[2]), offset=loc))
    sqrt.set_parse_action(lambda s, loc, t: Sqrt(int(t[1]), offset=loc))
    signed.set_parse_action(lambda t: t[1] if t[0] == "+" else "-" + t[1])
    number.set_parse_action(lambda t: Number(Fraction(t[0])))
    factor.set_parse_action(lambda t: t[0] if len(t) == 1 else (Neg(t[1]) if t[0] == "-" else t[1]))
    term.set_parse_action(_fold)
    element.set_parse_action(_fold)
    return element


def parse_expr(text: str) -> ElementExpr:
    """Parse text into an AST; syntax errors carry a 1-based offset."""
    try:
        return _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ExpressionSyntaxError("syntax error", offset=exc.loc + 1, text=text) from exc


def parse_element(text: str, group: GroupInstance, tag: AlgebraTag | str) -> AlgebraElement:
    tag = AlgebraTag(tag)
    return _as_element(evaluate(parse_expr(text), group, tag), group, tag)


def evaluate(node: ElementExpr, group: GroupInstance, tag: AlgebraTag) -> Value:
    if isinstance(node, Number):
        return group.scalar(node.value)
    if isinstance(node, Sqrt):
        if not group.field.is_quadratic or group.field.d != node.d:
            raise HVError(
                f"sqrt({node.d}) is not in {group.field.describe()} (at offset {node.offset + 1})"
            )
        return group.field.sqrt()
    if isinstance(node, Symbol):
        try:
            return AlgebraElement.basis(tag, group, _symbol(node, group))
        except HVError as exc:
            raise type(exc)(f"{exc} (at offset {node.offset + 1})") from exc
    if isinstance(node, Neg):
        return -evaluate(node.operand, group, tag)
    lhs = evaluate(node.lhs, group, tag)
    rhs = evaluate(node.rhs, group, tag)
    if node.op == "*":
        if isinstance(lhs, AlgebraElement) and isinstance(rhs, AlgebraElement):
            raise TagError("only scalar multiples of elements are allowed")
        if isinstance(lhs, AlgebraElement):
            return lhs.scale(rhs)
        if isinstance(rhs, AlgebraElement):
            return rhs.scale(lhs)
        return lhs * rhs
    if isinstance(lhs, Scalar) and isinstance(rhs, Scalar):
        return lhs + rhs if node.op == "+" else lhs - rhs
    a, b = _as_element(lhs, group, tag), _as_element(rhs, group, tag)
    return a + b if node.op == "+" else a - b


def _symbol(node: Symbol, group: GroupInstance) -> BasisSymbol:
    if node.name in _CENTRAL:
        return _CENTRAL[node.name]
    x = group.element(*node.coords)
    if node.name == "L":
        return L(x)
    if node.name == "I":
        return I(x)
    return D(x, node.power)


def _as_element(value: Value, group: GroupInstance, tag: AlgebraTag) -> AlgebraElement:
    if isinstance(value, AlgebraElement):
        return value
    if not value:
        return AlgebraElement.zero(tag, group)
    if tag is AlgebraTag.W:
        raise TagError("a bare scalar term has no meaning in W")
    unit = D(group.zero(), 0) if tag is AlgebraTag.D else I(group.zero())
    return AlgebraElement.basis(tag, group, unit, value)


def format_element(u: AlgebraElement) -> str:
    """Canonical text, highest terms first and the center last."""
    if u.is_zero():
        return "0"
    pieces: list[str] = []
    for sym, coeff in reversed(list(u.terms.items())):
        if coeff.is_rational:
            negative = coeff.rational < 0
            magnitude = -coeff.rational if negative else coeff.rational
            body = str(sym) if magnitude == 1 else f"{magnitude}*{sym}"
        else:
            negative = False
            body = f"({coeff})*{sym}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
