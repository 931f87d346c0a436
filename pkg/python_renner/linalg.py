from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from sympy import Matrix, Rational

if TYPE_CHECKING:  # pragma: no cover
    from typing import Sequence, Union

    Number = Union[int, Fraction]
    Vector = tuple[Number, ...]


def _to_sympy(value: Number) -> Rational:
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def _to_fraction(value: object) -> Fraction:
    # Entries coming back from sympy are Integer or Rational.
    return Fraction(int(value.p), int(value.q))  # type: ignore[attr-defined]


def to_matrix(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> Matrix:
    """Builds an exact sympy matrix from integer / Fraction rows.

    Args:
        rows: The rows of the matrix.
        ncols: The number of columns; only needed when `rows` is empty.
    """
    if not rows:
        return Matrix.zeros(0, ncols or 0)
    return Matrix([[_to_sympy(x) for x in row] for row in rows])


def rank(rows: Sequence[Sequence[Number]]) -> int:
    if not rows or not rows[0]:
        return 0
    return int(to_matrix(rows).rank())


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix; the empty matrix has determinant 1."""
    if not rows:
        return 1
    return int(to_matrix(rows).det(method="bareiss"))


def normalize_integer(vector: Sequence[Number]) -> tuple[int, ...]:
    """Scales a rational vector to the primitive integer vector on the same ray."""
    fractions = [Fraction(x) for x in vector]
    denominator = 1
    for x in fractions:
        denominator = denominator * x.denominator // gcd(denominator, x.denominator)
    integers = [int(x * denominator) for x in fractions]
    common = 0
    for x in integers:
        common = gcd(common, x)
    if common == 0:
        return tuple(integers)
    return tuple(x // common for x in integers)


def kernel_basis(rows: Sequence[Sequence[Number]], ncols: int) -> list[tuple[int, ...]]:
    """Returns a basis of {x : Mx = 0} made of primitive integer vectors.

    The basis is the one read off the reduced row echelon form of M (one vector
    per free column), so the same matrix always gives the same basis.
    """
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    return [normalize_integer([_to_fraction(x) for x in v]) for v in to_matrix(rows).nullspace()]


def solve(columns: Sequence[Sequence[Number]], target: Sequence[Number]) -> tuple[Fraction, ...] | None:
    """Solves sum_j c_j * columns[j] = target exactly.

    The columns must be linearly independent.  Returns None if the system is
    inconsistent.
    """
    if not columns:
        return () if all(x == 0 for x in target) else None
    n = len(target)
    augmented = Matrix(
        [[_to_sympy(column[i]) for column in columns] + [_to_sympy(target[i])] for i in range(n)]
    )
    reduced, pivots = augmented.rref()
    k = len(columns)
    if k in pivots:
        return None
    solution = [Fraction(0)] * k
    for row, column in enumerate(pivots):
        solution[column] = _to_fraction(reduced[row, k])
    return tuple(solution)


def pivot_columns(rows: Sequence[Sequence[Number]]) -> tuple[int, ...]:
    if not rows:
        return ()
    _, pivots = to_matrix(rows).rref()
    return tuple(int(p) for p in pivots)


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of a point set; -1 for no points."""
    if not points:
        return -1
    base = points[0]
    differences = [[p[i] - base[i] for i in range(len(base))] for p in points[1:]]
    return rank(differences)


def row_basis(rows: Sequence[Sequence[Number]]) -> tuple[tuple[Fraction, ...], ...]:
    """The nonzero rows of the reduced row echelon form: a canonical basis of the row space."""
    if not rows:
        return ()
    reduced, pivots = to_matrix(rows).rref()
    return tuple(tuple(_to_fraction(x) for x in reduced.row(r)) for r in range(len(pivots)))
