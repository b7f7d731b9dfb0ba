"""Exact dense linear algebra over Q and Q(i).

Forward elimination is fraction-free (Bareiss) on rows cleared to integers;
the reduced echelon form needed for kernels is finished with ``Fraction``.
Pivoting: first nonzero column, then the row whose pivot entry has the
smallest numerator bit-length (ties broken by row index).
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .scalars import GaussianRational, bit_size


class Matrix:
    """Row-major rectangular matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[Fraction(0)] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.rows)], self.nrows) if self.rows else Matrix([], 0)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        cols = list(zip(*other.rows))
        return Matrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows],
            other.ncols,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix([[a * c for a in r] for r in self.rows], self.ncols)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def __repr__(self):
        return f"Matrix({[[str(a) for a in r] for r in self.rows]})"


def _rows(M) -> list[list]:
    return [list(r) for r in (M.rows if isinstance(M, Matrix) else M)]


def _ncols(M, ncols):
    if isinstance(M, Matrix):
        return M.ncols
    if ncols is not None:
        return ncols
    return len(M[0]) if M else 0


def _clear_row(row: list) -> list:
    """Scale a rational row to integers (rank- and kernel-preserving)."""
    den = 1
    for a in row:
        if a:
            den = lcm(den, Fraction(a).denominator)
    return [int(Fraction(a) * den) for a in row]


def _is_gaussian(rows) -> bool:
    return any(isinstance(a, GaussianRational) for r in rows for a in r)


def echelon(M, ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Fraction-free row echelon form; returns (nonzero rows, pivot columns)."""
    rows = _rows(M)
    ncols = _ncols(M, ncols)
    gaussian = _is_gaussian(rows)
    if not gaussian:
        rows = [_clear_row(r) for r in rows]
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    prev = 1
    top = 0
    for col in range(ncols):
        if top >= len(rows):
            break
        cand = [i for i in range(top, len(rows)) if rows[i][col] != 0]
        if not cand:
            continue
        best = min(cand, key=lambda i: (bit_size(rows[i][col]), i))
        rows[top], rows[best] = rows[best], rows[top]
        piv = rows[top][col]
        for i in range(top + 1, len(rows)):
            a = rows[i][col]
            r = rows[i]
            p = rows[top]
            if gaussian:
                rows[i] = r[:col] + [(piv * r[j] - a * p[j]) / prev for j in range(col, ncols)]
            elif a == 0 and prev == 1:
                rows[i] = [piv * x for x in r]
            else:
                rows[i] = r[:col] + [(piv * r[j] - a * p[j]) // prev for j in range(col, ncols)]
        prev = piv
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def rank(M, ncols: int | None = None) -> int:
    return len(echelon(M, ncols)[1])


def rref(M, ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (unique) and pivot columns."""
    rows, pivots = echelon(M, ncols)
    ncols = _ncols(M, ncols)
    R = [[Fraction(a) if isinstance(a, int) else a for a in r] for r in rows]
    for k in range(len(R) - 1, -1, -1):
        col = pivots[k]
        inv = 1 / R[k][col]
        R[k] = [a * inv for a in R[k]]
        for i in range(k):
            a = R[i][col]
            if a != 0:
                R[i] = [x - a * y for x, y in zip(R[i], R[k])]
    return R, pivots


def rank_kernel(M, ncols: int | None = None) -> tuple[int, list[list]]:
    """Exact rank and a kernel basis in reduced echelon form."""
    ncols = _ncols(M, ncols)
    R, pivots = rref(M, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, p in enumerate(pivots):
            v[p] = -R[k][f]
        basis.append(v)
    if basis:
        basis, _ = rref(basis, ncols)
    return len(pivots), basis


def kernel(M, ncols: int | None = None) -> list[list]:
    return rank_kernel(M, ncols)[1]


def solve_affine(A, b: Sequence, ncols: int | None = None):
    """Solve A x = b.  Returns (particular, kernel basis) or None if inconsistent.

    The particular solution sets every free variable to zero."""
    ncols = _ncols(A, ncols)
    rows = _rows(A)
    aug = [list(r) + [b[i]] for i, r in enumerate(rows)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for k, p in enumerate(pivots):
        x[p] = R[k][ncols]
    return x, kernel(rows, ncols)


def in_span(vectors: Sequence[Sequence], v: Sequence, ncols: int | None = None) -> bool:
    vectors = [list(u) for u in vectors]
    if not vectors:
        return all(a == 0 for a in v)
    n = len(v)
    return rank(vectors, n) == rank(vectors + [list(v)], n)
