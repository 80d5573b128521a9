"""Exact linear algebra over the rationals.

Vectors and dense matrices with fractions.Fraction entries, reduced
row-echelon form, kernels, eigenspaces and an exact positive
semidefiniteness test.  Python's Fraction already keeps every value in
lowest terms with a positive denominator and arbitrary-precision
integer parts, so it serves directly as the scalar type.

Rationals serialize as "p/q" with the "/q" omitted when q == 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x, den=None) -> Fraction:
    """Build a Fraction from ints, strings like "3/8" or "-5", or Fractions."""
    if den is not None:
        return Fraction(x, den)
    return Fraction(x)


def rat_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s.strip())


class Vector:
    """Immutable rational vector."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(Fraction(c) for c in coords)

    @classmethod
    def zero(cls, n: int) -> "Vector":
        return cls([ZERO] * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Vector":
        c = [ZERO] * n
        c[i] = ONE
        return cls(c)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vector") -> "Vector":
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.coords)

    def __mul__(self, scalar) -> "Vector":
        s = Fraction(scalar)
        return Vector(a * s for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Vector") -> Fraction:
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return sum((a * b for a, b in zip(self.coords, other.coords)), ZERO)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return "Vector([%s])" % ", ".join(rat_str(c) for c in self.coords)


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> "Matrix":
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.rows[i])

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def _shape_check(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def scale(self, scalar) -> "Matrix":
        s = Fraction(scalar)
        return Matrix([x * s for x in r] for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return Matrix(
            [sum((a * b for a, b in zip(r, c)), ZERO) for c in cols]
            for r in self.rows
        )

    def apply(self, v: Vector) -> Vector:
        if self.ncols != len(v):
            raise ValueError("shape mismatch")
        return Vector(sum((a * b for a, b in zip(r, v)), ZERO) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and the tuple of pivot columns.

        Pivots are chosen as the first nonzero entry scanning columns
        left to right, so the result is deterministic.
        """
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if rows[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = ONE / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix(rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[Vector]:
        """Basis of the null space, one vector per free column.

        Basis vectors are ordered by their free column and have a 1 in
        that coordinate, so the basis is canonical for a given matrix.
        """
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [ZERO] * self.ncols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -R.rows[r][fc]
            basis.append(Vector(v))
        return basis

    def eigenspace(self, lam) -> list[Vector]:
        """Kernel basis of (M - lam*I); empty list when lam is not an eigenvalue."""
        if self.nrows != self.ncols:
            raise ValueError("eigenspace of a non-square matrix")
        lam = Fraction(lam)
        shifted = Matrix(
            [
                [x - lam if i == j else x for j, x in enumerate(row)]
                for i, row in enumerate(self.rows)
            ]
        )
        return shifted.kernel()

    def solve(self, rhs: Vector) -> Vector | None:
        """One exact solution of M x = rhs, or None if inconsistent."""
        aug = Matrix([list(r) + [rhs[i]] for i, r in enumerate(self.rows)])
        R, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [ZERO] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = R.rows[r][self.ncols]
        return Vector(x)

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = ONE
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if rows[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                return ZERO
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                d = -d
            d *= rows[c][c]
            inv = ONE / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] * inv
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return d

    def is_psd(self) -> bool:
        """Exact test for x^T M x >= 0 over all rational x.

        Symmetric elimination: a negative diagonal pivot refutes, a zero
        diagonal entry forces its whole row to vanish (else an
        indefinite 2x2 block exists), and positive pivots reduce to the
        Schur complement.  No numerics involved.
        """
        if not self.is_symmetric():
            raise ValueError("is_psd requires a symmetric matrix")
        a = [list(r) for r in self.rows]
        idx = list(range(self.nrows))
        while idx:
            # prefer a strictly positive pivot; zero diagonals must have
            # zero rows, which we peel off
            k = None
            for i in idx:
                if a[i][i] > 0:
                    k = i
                    break
            if k is None:
                # all remaining diagonal entries are <= 0
                for i in idx:
                    if a[i][i] < 0:
                        return False
                    if any(a[i][j] != 0 for j in idx):
                        return False
                return True
            d = a[k][k]
            idx.remove(k)
            for i in idx:
                if a[i][k] == 0:
                    continue
                f = a[i][k] / d
                for j in idx:
                    a[i][j] -= f * a[k][j]
        return True

    def __repr__(self):
        body = "; ".join(
            " ".join(rat_str(x) for x in r) for r in self.rows
        )
        return f"Matrix[{body}]"


def span_contains(basis: Sequence[Vector], v: Vector) -> bool:
    """Exact membership of v in the span of basis (empty basis spans 0)."""
    if not basis:
        return v.is_zero()
    M = Matrix.from_columns(list(basis))
    return M.solve(v) is not None
