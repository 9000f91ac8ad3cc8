"""Exact rational arithmetic and exact linear algebra.

Every number in this package is an arbitrary-precision rational
(``fractions.Fraction``).  No floating point is used anywhere: the results
we compute are exact equalities and inequalities of rationals, and a single
rounding error would invalidate a certificate.

This module provides the scalar type (:data:`Rational`), immutable vector
and matrix wrappers (:class:`QVector`, :class:`QMatrix`), exact linear
solving by Gaussian elimination, and an exact negative-definiteness test.
Instances in this package are small (at most ~12x12), so a dense, simple,
deterministic implementation is preferred over anything clever.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

#: The sole scalar number type of the package.  ``fractions.Fraction`` keeps
#: a canonical form (positive denominator, gcd(|num|, den) = 1) after every
#: operation, which is exactly the invariant we need.
Rational = Fraction

RationalLike = Union[Rational, int, str]


class ExactLinError(Exception):
    """Base class for errors raised by this module."""


class DimensionMismatch(ExactLinError):
    """Operands have incompatible shapes."""


class SingularMatrix(ExactLinError):
    """A linear solve was attempted on a singular matrix."""


class NotSymmetric(ExactLinError):
    """A symmetric-only operation received a non-symmetric matrix."""


def rat(value: RationalLike) -> Rational:
    """Coerce an int, ``p/q`` string, or Rational to a Rational.

    Floats are rejected on purpose: they have no place in this package.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Rational) -> str:
    """Serialize a rational as ``p/q`` (or a bare integer)."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class QVector:
    """An immutable fixed-length vector of rationals."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[RationalLike]):
        self._entries = tuple(rat(e) for e in entries)

    @property
    def entries(self) -> tuple[Rational, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int) -> Rational:
        return self._entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, QVector):
            return self._entries == other._entries
        if isinstance(other, (tuple, list)):
            return self._entries == tuple(rat(e) for e in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return "QVector(%s)" % ", ".join(rat_str(e) for e in self._entries)

    def __add__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a - b for a, b in zip(self._entries, other._entries))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self._entries)

    def scale(self, c: RationalLike) -> "QVector":
        c = rat(c)
        return QVector(c * a for a in self._entries)

    def dot(self, other: "QVector") -> Rational:
        self._check_len(other)
        return sum((a * b for a, b in zip(self._entries, other._entries)),
                   Fraction(0))

    def _check_len(self, other: "QVector") -> None:
        if len(self) != len(other):
            raise DimensionMismatch(
                f"vector lengths differ: {len(self)} vs {len(other)}")


class QMatrix:
    """An immutable rectangular matrix of rationals."""

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Sequence[Iterable[RationalLike]]):
        built = tuple(QVector(r) for r in rows)
        if not built:
            raise DimensionMismatch("matrix must have at least one row")
        width = len(built[0])
        for r in built:
            if len(r) != width:
                raise DimensionMismatch("ragged rows in matrix")
        self._rows = built
        self._nrows = len(built)
        self._ncols = width

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def rows(self) -> tuple[QVector, ...]:
        return self._rows

    def row(self, i: int) -> QVector:
        return self._rows[i]

    def entry(self, i: int, j: int) -> Rational:
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, QMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rat_str(e) for e in r) for r in self._rows)
        return f"QMatrix[{body}]"

    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(self.entry(i, j) == self.entry(j, i)
                   for i in range(self._nrows) for j in range(i))

    def transpose(self) -> "QMatrix":
        return QMatrix([[self.entry(i, j) for i in range(self._nrows)]
                        for j in range(self._ncols)])

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-e for e in r] for r in self._rows])

    def mul_vector(self, v: QVector) -> QVector:
        if len(v) != self._ncols:
            raise DimensionMismatch(
                f"matrix has {self._ncols} columns, vector has {len(v)}")
        return QVector(r.dot(v) for r in self._rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self.entry(i, j) for j in cols] for i in rows])

    def determinant(self) -> Rational:
        """Exact determinant by Gaussian elimination."""
        if not self.is_square():
            raise DimensionMismatch("determinant needs a square matrix")
        n = self._nrows
        work = [list(r) for r in self._rows]
        det = Fraction(1)
        for col in range(n):
            pivot_row = next(
                (r for r in range(col, n) if work[r][col] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                det = -det
            pivot = work[col][col]
            det *= pivot
            for r in range(col + 1, n):
                factor = work[r][col] / pivot
                if factor:
                    work[r] = [a - factor * b
                               for a, b in zip(work[r], work[col])]
        return det


def solve_linear(a: QMatrix, b: QVector) -> QVector:
    """Solve A x = b exactly for square nonsingular A.

    Plain Gaussian elimination with the first nonzero pivot in each column;
    deterministic and exact over rationals.
    """
    if not a.is_square():
        raise DimensionMismatch("solve_linear needs a square matrix")
    n = a.nrows
    if len(b) != n:
        raise DimensionMismatch(
            f"matrix is {n}x{n}, right-hand side has length {len(b)}")
    work = [list(r) + [rhs] for r, rhs in zip(a.rows, b)]
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular (zero pivot column)")
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [e / pivot for e in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [a_ - factor * b_
                           for a_, b_ in zip(work[r], work[col])]
    return QVector(work[i][n] for i in range(n))


def is_negative_definite(a: QMatrix) -> bool:
    """Exact test: all leading principal minors of -A are positive."""
    if not a.is_symmetric():
        raise NotSymmetric("negative-definiteness is tested on symmetric "
                           "matrices only")
    neg = -a
    n = neg.nrows
    for k in range(1, n + 1):
        idx = list(range(k))
        if neg.submatrix(idx, idx).determinant() <= 0:
            return False
    return True
