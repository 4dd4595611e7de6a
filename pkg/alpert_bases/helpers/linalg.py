"""Exact rational linear algebra on top of sympy matrices.

Matrices are passed around as lists of rows of Fractions; sympy performs the
fraction-free elimination and results come back as Fractions.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

Row = Sequence[Fraction]


def to_sympy_matrix(rows: Sequence[Row], ncols: Optional[int] = None) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols or 0)
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])


def to_fraction(value) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def rank(rows: Sequence[Row]) -> int:
    if not rows or not rows[0]:
        return 0
    return to_sympy_matrix(rows).rank()


def pivot_columns(rows: Sequence[Row]) -> Tuple[int, ...]:
    """Columns that are not combinations of earlier columns."""
    if not rows or not rows[0]:
        return ()
    _, pivots = to_sympy_matrix(rows).rref()
    return tuple(pivots)


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of {c : rows * c = 0}; the identity basis when there are no rows."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    if ncols == 0:
        return []
    return [[to_fraction(x) for x in vector] for vector in to_sympy_matrix(rows).nullspace()]


def solve_columns(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Coefficients c with sum_j c_j * columns[j] = target, or None if none exist.

    The columns are assumed linearly independent, so a solution is unique.
    """
    if not columns:
        return [] if all(x == 0 for x in target) else None
    matrix = to_sympy_matrix(columns).T
    rhs = to_sympy_matrix([[x] for x in target])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [to_fraction(x) for x in solution]
