"""Exact rational linear algebra on small sparse matrices.

Matrices are stored column-major: column ``j`` is a dict ``row -> Fraction``
holding only non-zero entries.  Rank uses fraction-free (Bareiss)
elimination on an integer scaling of the rows; kernels and linear solves use
Gauss-Jordan over ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Vector = list[Fraction]


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    columns: tuple[Mapping[int, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.columns) != self.ncols:
            raise ValueError("column count does not match ncols")
        cols = []
        for col in self.columns:
            clean = {int(r): Fraction(v) for r, v in col.items() if v}
            for r in clean:
                if not 0 <= r < self.nrows:
                    raise IndexError(f"row {r} outside 0..{self.nrows - 1}")
            cols.append(dict(sorted(clean.items())))
        object.__setattr__(self, "columns", tuple(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> SparseMatrix:
        return cls(nrows, ncols, tuple({} for _ in range(ncols)))

    @classmethod
    def identity(cls, n: int, scale: Fraction | int = 1) -> SparseMatrix:
        return cls(n, n, tuple({j: Fraction(scale)} for j in range(n)))

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> SparseMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = tuple({i: Fraction(rows[i][j]) for i in range(nrows) if rows[i][j]} for j in range(ncols))
        return cls(nrows, ncols, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def column(self, j: int) -> Vector:
        v = [Fraction(0)] * self.nrows
        for i, x in self.columns[j].items():
            v[i] = x
        return v

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = []
        for col in other.columns:
            acc: dict[int, Fraction] = {}
            for k, b in col.items():
                for i, a in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            cols.append(acc)
        return SparseMatrix(self.nrows, other.ncols, tuple(cols))

    def __mul__(self, scalar) -> SparseMatrix:
        s = Fraction(scalar)
        return SparseMatrix(self.nrows, self.ncols, tuple({i: v * s for i, v in c.items()} for c in self.columns))

    __rmul__ = __mul__

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.columns, other.columns):
            acc = dict(a)
            for i, v in b.items():
                acc[i] = acc.get(i, 0) - v
            cols.append(acc)
        return SparseMatrix(self.nrows, self.ncols, tuple(cols))

    def transpose(self) -> SparseMatrix:
        cols: list[dict[int, Fraction]] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return SparseMatrix(self.ncols, self.nrows, tuple(cols))

    def apply(self, x: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.nrows
        for j, col in enumerate(self.columns):
            if x[j]:
                for i, v in col.items():
                    out[i] += v * x[j]
        return out


def _as_dense(mat: SparseMatrix | Sequence[Sequence]) -> list[list[Fraction]]:
    if isinstance(mat, SparseMatrix):
        return mat.to_dense()
    return [[Fraction(x) for x in row] for row in mat]


def rank(mat: SparseMatrix | Sequence[Sequence]) -> int:
    """Exact rank by fraction-free Gaussian elimination.

    Each row is first scaled by the lcm of its denominators, which leaves the
    rank unchanged and makes every entry an integer; Bareiss elimination then
    keeps all intermediate values integral.
    """
    rows = []
    for row in _as_dense(mat):
        if not any(row):
            continue
        m = lcm(*(x.denominator for x in row))
        rows.append([int(x * m) for x in row])
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            ri, rr = rows[i], rows[r]
            rows[i] = [(p * ri[j] - a * rr[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def rref(mat: SparseMatrix | Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = _as_dense(mat)
    nrows = len(A)
    ncols = len(A[0]) if nrows else (mat.ncols if isinstance(mat, SparseMatrix) else 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def _normalize_leading(v: Vector) -> Vector:
    lead = next((x for x in v if x), None)
    if lead is None or lead == 1:
        return v
    return [x / lead for x in v]


def nullspace(mat: SparseMatrix | Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of the kernel, one vector per free column, first non-zero entry 1."""
    if isinstance(mat, SparseMatrix):
        ncols = mat.ncols
    elif ncols is None:
        ncols = len(mat[0]) if len(mat) else 0
    R, pivots = rref(mat)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R[row][free]
        basis.append(_normalize_leading(v))
    return basis


def solve(columns: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """Solve ``sum_j x_j * columns[j] = b`` exactly.

    Returns one solution (free variables set to zero) or ``None`` if ``b`` is
    not in the span.
    """
    n = len(b)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(b[i])] for i in range(n)]
    R, pivots = rref(aug) if n else ([], [])
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, pc in enumerate(pivots):
        x[pc] = R[row][k]
    return x


def independent_columns(columns: Iterable[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subset."""
    cols = [list(c) for c in columns]
    if not cols:
        return []
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))]
    if not rows:
        return []
    _, pivots = rref(rows)
    return pivots
