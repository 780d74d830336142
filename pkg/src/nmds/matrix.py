"""Dense exact linear algebra over a :class:`~nmds.gf.Field`."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .errors import BadDimension, BudgetExceeded, DuplicatePoints, MixedFields, NotSquare
from .gf import Field, parse_element

MINOR_BUDGET = 10**7


class Matrix:
    """Immutable row-major matrix whose entries are element encodings of one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise BadDimension(f"ragged rows: expected {ncols} columns, got {len(r)}")
            for x in r:
                field.check(x)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_text(cls, field: Field, text: str) -> "Matrix":
        return parse_matrix(field, text)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        return f"Matrix(GF({self.field.q}), {self.nrows}x{self.ncols}, {self.to_text()!r})"

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix(self.field, [[r[j] for j in idx] for r in self.rows], len(idx))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.nrows else [], self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MixedFields("matrices over different fields")
        if self.ncols != other.nrows:
            raise BadDimension(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, other.ncols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self, annotate: bool = False) -> str:
        return ";".join(",".join(self.field.format(x, annotate) for x in r) for r in self.rows)

    def det(self) -> int:
        return det(self)

    def rank(self) -> int:
        return rank_rref(self)[0]


def parse_matrix(field: Field, text: str) -> Matrix:
    """Parse ``"a11,a12;a21,a22"``; entries use the element syntax of :mod:`nmds.gf`."""
    rows = [
        [parse_element(field, tok) for tok in row.split(",")]
        for row in text.strip().split(";")
        if row.strip()
    ]
    return Matrix(field, rows)


def det(A: Matrix) -> int:
    """Determinant by Gaussian elimination (exact over the field)."""
    if A.nrows != A.ncols:
        raise NotSquare(f"determinant of a {A.nrows}x{A.ncols} matrix")
    F = A.field
    n = A.nrows
    a = [list(r) for r in A.rows]
    result = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = F.neg(result)
        pv = a[c][c]
        result = F.mul(result, pv)
        inv = F.inv(pv)
        for r in range(c + 1, n):
            if a[r][c]:
                f = F.mul(a[r][c], inv)
                row_r, row_c = a[r], a[c]
                for j in range(c, n):
                    if row_c[j]:
                        row_r[j] = F.sub(row_r[j], F.mul(f, row_c[j]))
    return result


def rank_rref(A: Matrix) -> tuple[int, Matrix, list[int]]:
    """Return ``(rank, reduced row echelon form, pivot columns)``."""
    F = A.field
    a = [list(r) for r in A.rows]
    nrows, ncols = A.nrows, A.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, x) for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return r, Matrix(F, a, ncols), pivots


def nullspace(A: Matrix) -> Matrix:
    """Basis (as rows) of ``{x : A x^T = 0}``."""
    F = A.field
    rank, R, pivots = rank_rref(A)
    free = [c for c in range(A.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * A.ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.rows[i][f])
        basis.append(v)
    return Matrix(F, basis, A.ncols)


def all_k_column_subsets_nonsingular(
    A: Matrix, k: int | None = None, *, force: bool = False, budget: int = MINOR_BUDGET
) -> tuple[bool, tuple[int, ...] | None]:
    """Check that every k columns of a k-row matrix are linearly independent.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    first singular column subset in lexicographic order.
    """
    if k is None:
        k = A.nrows
    if k != A.nrows or k > A.ncols or k < 1:
        raise BadDimension(f"need k = rows = {A.nrows} <= cols = {A.ncols}, got k = {k}")
    total = comb(A.ncols, k)
    if total > budget and not force:
        raise BudgetExceeded(f"C({A.ncols}, {k}) = {total} minors exceed budget {budget}")
    for cols in itertools.combinations(range(A.ncols), k):
        if det(A.columns(cols)) == 0:
            return False, cols
    return True, None


def _check_distinct(points) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePoints(f"points are not pairwise distinct: {list(points)}")


def gap_vandermonde_matrix(field: Field, points) -> Matrix:
    """Rows ``1, x, ..., x^(n-2), x^n`` evaluated at the n points."""
    n = len(points)
    exps = list(range(n - 1)) + [n]
    return Matrix(field, [[field.pow(x, e) for x in points] for e in exps], n)


def vandermonde_gap_det(field: Field, points) -> int:
    points = [field.check(int(x)) for x in points]
    if len(points) < 2:
        raise BadDimension("need at least two points")
    _check_distinct(points)
    return det(gap_vandermonde_matrix(field, points))


def vandermonde_gap_closed(field: Field, points) -> int:
    """``(x_1 + ... + x_n) * prod_{i<j} (x_j - x_i)``, the closed form of the determinant above."""
    points = [field.check(int(x)) for x in points]
    _check_distinct(points)
    s = 0
    for x in points:
        s = field.add(s, x)
    prod = 1
    for i, j in itertools.combinations(range(len(points)), 2):
        prod = field.mul(prod, field.sub(points[j], points[i]))
    return field.mul(s, prod)
