"""Exact rational scalars, dense matrices, and an affine solver.

Scalars are `fractions.Fraction` values, which are canonical by
construction: fully reduced, positive denominator, zero stored as 0/1.
Nothing in this module ever rounds or touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction

QVector = tuple[Fraction, ...]


def q_canonical(numerator: int, denominator: int = 1) -> Fraction:
    """Reduced positive-denominator rational numerator/denominator."""
    if denominator == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(numerator, denominator)


def _frac(value) -> Fraction:
    # Fraction(str) would accept floats-as-strings; keep the domain tight.
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class QMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: QVector

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != rows*cols = {self.rows * self.cols}"
            )
        object.__setattr__(self, "entries", tuple(_frac(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        flat = tuple(_frac(e) for r in rows for e in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(Fraction(1 if i == j else 0) for i in range(n) for j in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> QVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> QVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, vec: Sequence) -> QVector:
        """Matrix-vector product."""
        v = [_frac(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        return tuple(
            sum((self[i, j] * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )


def transpose(m: QMatrix) -> QMatrix:
    return QMatrix(
        m.cols, m.rows, tuple(m[i, j] for j in range(m.cols) for i in range(m.rows))
    )


def kronecker(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker product; block (i,j) is a[i,j] * b."""
    entries = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                aij = a[i, j]
                for l in range(b.cols):
                    entries.append(aij * b[k, l])
    return QMatrix(a.rows * b.rows, a.cols * b.cols, tuple(entries))


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact affine solve M v = b.

    When consistent, `particular` pins every free variable to zero and the
    solution set is exactly particular + span(nullspace_basis).  The basis
    holds one kernel vector per free column, in ascending free-column
    order; it describes M alone, so it is reported even when no solution
    exists.
    """

    consistent: bool
    particular: QVector | None
    nullspace_basis: tuple[QVector, ...]


def solve_affine(matrix: QMatrix, rhs: Sequence) -> LinearSolution:
    """Gauss-Jordan solve of matrix * v = rhs over the rationals.

    Pivoting takes the first nonzero entry in column order, so the pivot
    column set is the lexicographically earliest independent column set.
    Each nullspace basis vector carries the reduced column of its free
    variable on the pivot slots and -1 in the free slot itself, which
    makes M v = 0 immediate from the reduced rows.
    """
    b = [_frac(x) for x in rhs]
    if len(b) != matrix.rows:
        raise ValueError(f"rhs length {len(b)} != rows {matrix.rows}")
    n = matrix.cols
    aug = [list(matrix.row(i)) + [b[i]] for i in range(matrix.rows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, matrix.rows) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][c]
        aug[r] = [e / pv for e in aug[r]]
        for i in range(matrix.rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == matrix.rows:
            break
    consistent = all(aug[i][n] == 0 for i in range(r, matrix.rows))
    pivot_set = set(pivot_cols)
    basis = []
    for free_col in range(n):
        if free_col in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free_col] = Fraction(-1)
        for k, c in enumerate(pivot_cols):
            v[c] = aug[k][free_col]
        basis.append(tuple(v))
    # the nullspace belongs to the matrix, not the rhs, so report it either way
    if not consistent:
        return LinearSolution(False, None, tuple(basis))
    particular = [Fraction(0)] * n
    for k, c in enumerate(pivot_cols):
        particular[c] = aug[k][n]
    return LinearSolution(True, tuple(particular), tuple(basis))


def format_rational(q: Fraction) -> str:
    """Render p/q, omitting the denominator when it is 1."""
    q = _frac(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
