"""Dense square matrices over exact rationals, plus an exact linear kernel.

The matrix type is the workhorse for every algebra realization: its entries
are exact rationals (int or Fraction), it is immutable, and all operations
are pure.  The linear kernel (rank, solve, determinant, span expansion) runs
rational Gaussian elimination with no pivot tolerance: a pivot is zero
exactly or not at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Scalar, as_fraction, is_scalar


@dataclass(frozen=True)
class EdgeMatrix:
    """Immutable square matrix over exact rationals.

    The name records the intended reading: the elementary matrix with a 1 in
    row i, column j is the directed edge i -> j, and a general matrix is a
    rational linear combination of such edges.
    """

    dim: int
    rows: tuple[tuple[Scalar, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]]) -> "EdgeMatrix":
        dim = len(rows)
        if dim == 0:
            raise ValueError("matrix must have positive dimension")
        out = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            for x in row:
                if not is_scalar(x):
                    raise TypeError(f"exact scalar expected, got {type(x).__name__}")
            out.append(tuple(row))
        return EdgeMatrix(dim, tuple(out))

    @staticmethod
    def zero(dim: int) -> "EdgeMatrix":
        if dim <= 0:
            raise ValueError("matrix must have positive dimension")
        row = (0,) * dim
        return EdgeMatrix(dim, (row,) * dim)

    @staticmethod
    def identity(dim: int) -> "EdgeMatrix":
        if dim <= 0:
            raise ValueError("matrix must have positive dimension")
        return EdgeMatrix(
            dim, tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
        )

    @staticmethod
    def unit(dim: int, i: int, j: int) -> "EdgeMatrix":
        """Elementary matrix with a single 1 at (row i, column j), 1-indexed."""
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"unit index ({i},{j}) out of range for dim {dim}")
        return EdgeMatrix(
            dim,
            tuple(
                tuple(1 if (r == i - 1 and c == j - 1) else 0 for c in range(dim))
                for r in range(dim)
            ),
        )

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.rows[r][c]

    def __add__(self, other: "EdgeMatrix") -> "EdgeMatrix":
        self._require_same_dim(other)
        return EdgeMatrix(
            self.dim,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: "EdgeMatrix") -> "EdgeMatrix":
        self._require_same_dim(other)
        return EdgeMatrix(
            self.dim,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self) -> "EdgeMatrix":
        return EdgeMatrix(self.dim, tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c: Scalar) -> "EdgeMatrix":
        if not is_scalar(c):
            raise TypeError(f"exact scalar expected, got {type(c).__name__}")
        return EdgeMatrix(self.dim, tuple(tuple(c * a for a in row) for row in self.rows))

    def __matmul__(self, other: "EdgeMatrix") -> "EdgeMatrix":
        self._require_same_dim(other)
        n = self.dim
        brows = other.rows
        out = []
        for arow in self.rows:
            acc: list[Scalar] = [0] * n
            for k, a in enumerate(arow):
                if a:
                    brow = brows[k]
                    for j in range(n):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return EdgeMatrix(n, tuple(out))

    def transpose(self) -> "EdgeMatrix":
        return EdgeMatrix(self.dim, tuple(zip(*self.rows)))

    def signed_transpose(self, signs: Sequence[int]) -> "EdgeMatrix":
        """Transpose with each entry (i,j) multiplied by signs[i]*signs[j]."""
        if len(signs) != self.dim:
            raise ValueError("sign vector length must equal matrix dimension")
        n = self.dim
        return EdgeMatrix(
            n,
            tuple(
                tuple(signs[i] * signs[j] * self.rows[j][i] for j in range(n))
                for i in range(n)
            ),
        )

    def trace(self) -> Fraction:
        return as_fraction(sum(self.rows[i][i] for i in range(self.dim)))

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(as_fraction(self.rows[i][i]) for i in range(self.dim))

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def sparse(self) -> dict[tuple[int, int], Fraction]:
        """Nonzero entries keyed by (row, column), 0-indexed."""
        return {
            (r, c): as_fraction(x)
            for r, row in enumerate(self.rows)
            for c, x in enumerate(row)
            if x
        }

    def _require_same_dim(self, other: "EdgeMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")


def mat_mul(a: EdgeMatrix, b: EdgeMatrix) -> EdgeMatrix:
    """Matrix product; on edges, (i->j)(k->l) = (i->l) when j = k, else 0."""
    return a @ b


def mat_bracket(a: EdgeMatrix, b: EdgeMatrix) -> EdgeMatrix:
    """Commutator ab - ba."""
    return a @ b - b @ a


def mat_trace(a: EdgeMatrix) -> Fraction:
    """Sum of diagonal entries; an edge i->j contributes 1 iff i = j."""
    return a.trace()


# ---------------------------------------------------------------------------
# Exact linear kernel on sparse row vectors.
# ---------------------------------------------------------------------------


def _reduce_row(row: dict, echelon: dict) -> dict:
    """Eliminate a sparse row against echelon rows keyed by pivot."""
    row = dict(row)
    while row:
        pivot = min(row)
        if pivot not in echelon:
            return row
        factor = row[pivot] / echelon[pivot][pivot]
        for key, value in echelon[pivot].items():
            new = row.get(key, 0) - factor * value
            if new:
                row[key] = new
            else:
                row.pop(key, None)
    return row


def sparse_rank(rows: Iterable[dict]) -> int:
    """Rank of a family of sparse vectors (any hashable, orderable keys)."""
    echelon: dict = {}
    rank = 0
    for row in rows:
        reduced = _reduce_row(row, echelon)
        if reduced:
            echelon[min(reduced)] = reduced
            rank += 1
    return rank


class SpanSolver:
    """Expand matrices exactly in the span of a fixed matrix family.

    Rows are reduced into sparse echelon form once; each expansion then costs
    one elimination pass and returns the exact coefficient vector.
    """

    def __init__(self, basis: Sequence[EdgeMatrix]):
        if not basis:
            raise ValueError("empty basis")
        self.basis = list(basis)
        self.dim = basis[0].dim
        self._echelon: dict[tuple[int, int], tuple[dict, dict[int, Fraction]]] = {}
        for index, mat in enumerate(basis):
            if mat.dim != self.dim:
                raise ValueError("basis matrices must share one dimension")
            row = mat.sparse()
            coeffs = {index: Fraction(1)}
            reduced, combo = self._reduce(row, coeffs)
            if not reduced:
                raise ValueError(f"basis element {index} is linearly dependent")
            self._echelon[min(reduced)] = (reduced, combo)

    def _reduce(
        self, row: dict, coeffs: dict[int, Fraction]
    ) -> tuple[dict, dict[int, Fraction]]:
        row = dict(row)
        coeffs = dict(coeffs)
        while row:
            pivot = min(row)
            if pivot not in self._echelon:
                return row, coeffs
            erow, ecoeffs = self._echelon[pivot]
            factor = row[pivot] / erow[pivot]
            for key, value in erow.items():
                new = row.get(key, 0) - factor * value
                if new:
                    row[key] = new
                else:
                    row.pop(key, None)
            for key, value in ecoeffs.items():
                new = coeffs.get(key, Fraction(0)) - factor * value
                if new:
                    coeffs[key] = new
                else:
                    coeffs.pop(key, None)
        return row, coeffs

    def expand(self, mat: EdgeMatrix) -> list[Fraction]:
        """Coefficients c with mat = sum c_k basis_k; raises if not in span."""
        if mat.dim != self.dim:
            raise ValueError(f"dimension mismatch: {mat.dim} vs {self.dim}")
        residual, combo = self._reduce(mat.sparse(), {})
        if residual:
            raise ValueError("matrix does not lie in the span of the basis")
        out = [Fraction(0)] * len(self.basis)
        for index, value in combo.items():
            out[index] = -value
        return out

    def contains(self, mat: EdgeMatrix) -> bool:
        residual, _ = self._reduce(mat.sparse(), {})
        return not residual


# ---------------------------------------------------------------------------
# Dense helpers for small systems (simple roots, weights, Gram matrices).
# ---------------------------------------------------------------------------


def solve_linear(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> list[Fraction]:
    """Solve a consistent linear system exactly; raises on no/ambiguous solution."""
    nrows = len(matrix)
    if nrows == 0 or len(rhs) != nrows:
        raise ValueError("malformed linear system")
    ncols = len(matrix[0])
    aug = [[as_fraction(x) for x in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    pivots: list[int] = []
    row_at = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row_at, nrows) if aug[r][col]), None)
        if pivot_row is None:
            continue
        aug[row_at], aug[pivot_row] = aug[pivot_row], aug[row_at]
        pv = aug[row_at][col]
        aug[row_at] = [x / pv for x in aug[row_at]]
        for r in range(nrows):
            if r != row_at and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row_at])]
        pivots.append(col)
        row_at += 1
        if row_at == nrows:
            break
    for r in range(row_at, nrows):
        if aug[r][ncols]:
            raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = aug[r][ncols]
    return solution


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by rational Gaussian elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    work = [[as_fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pv = work[col][col]
        det *= pv
        for r in range(col + 1, n):
            if work[r][col]:
                factor = work[r][col] / pv
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return det


def is_positive_definite(matrix: Sequence[Sequence[Scalar]]) -> bool:
    """Sylvester test: all leading principal minors strictly positive."""
    n = len(matrix)
    for k in range(1, n + 1):
        minor = [row[:k] for row in matrix[:k]]
        if determinant(minor) <= 0:
            return False
    return True


def dot(x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return as_fraction(sum(a * b for a, b in zip(x, y)))
