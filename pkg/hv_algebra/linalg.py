"""Exact linear algebra over Q, delegated to sympy."""

from fractions import Fraction
from typing import Sequence

import sympy


def _to_sympy(value: Fraction | int) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    num, den = sympy.fraction(sympy.nsimplify(value))
    return Fraction(int(num), int(den))


def matrix(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols)
    return sympy.Matrix([[_to_sympy(v) for v in row] for row in rows])


def rref_rows(vectors: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form."""
    if not vectors:
        return []
    reduced, pivots = matrix(vectors, len(vectors[0])).rref()
    return [
        [_to_fraction(reduced[i, j]) for j in range(reduced.cols)] for i in range(len(pivots))
    ]


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """A basis of {v : Mv = 0}, returned in reduced row echelon form."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = matrix(rows, ncols).nullspace()
    vectors = [[_to_fraction(entry) for entry in vec] for vec in basis]
    return rref_rows(vectors)


def solve(
    rows: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]
) -> list[Fraction] | None:
    """The unique solution of Mx = b, or None when the system is inconsistent or underdetermined."""
    m = matrix(rows, len(rows[0]))
    b = sympy.Matrix([_to_sympy(v) for v in rhs])
    try:
        solution, params = m.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        return None
    return [_to_fraction(v) for v in solution]
