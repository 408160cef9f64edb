"""Generic dense exact linear algebra over a ring context.

This is the oracle layer: deliberately brute-force code that the closed
forms elsewhere in the package are tested against. Determinants come in
two independent flavors (first-row cofactor expansion, and elimination:
fraction-free Bareiss over the rationals, pivoted Gaussian over a prime
field) so that no identity is ever checked against a single algorithm.

Matrices are immutable. All indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import (
    CauchyKitError,
    ContextMismatchError,
    NotInvertibleError,
    RationalRing,
    RingContext,
    Scalar,
)


class ShapeError(CauchyKitError):
    """Matrix shapes do not fit the requested operation."""


class SizeLimitError(CauchyKitError):
    """A deliberately guarded brute-force path was asked to do too much."""


COFACTOR_MAX = 8  # n! growth; 8 keeps the expansion at desk scale


class Matrix:
    """Dense rows x cols matrix of exact scalars, row-major, immutable."""

    __slots__ = ("rows", "cols", "ctx", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence, ctx: RingContext):
        if rows < 1 or cols < 1:
            raise ShapeError(f"matrix must be at least 1x1, got {rows}x{cols}")
        coerced = tuple(ctx.coerce(e) for e in entries)
        if len(coerced) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(coerced)}"
            )
        self.rows = rows
        self.cols = cols
        self.ctx = ctx
        self.entries = coerced

    @classmethod
    def from_rows(cls, rows_seq: Sequence[Sequence], ctx: RingContext) -> "Matrix":
        rows = len(rows_seq)
        if rows == 0:
            raise ShapeError("matrix must have at least one row")
        cols = len(rows_seq[0])
        flat = []
        for r in rows_seq:
            if len(r) != cols:
                raise ShapeError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat, ctx)

    @classmethod
    def identity(cls, n: int, ctx: RingContext) -> "Matrix":
        one, zero = ctx.one, ctx.zero
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], ctx)

    def entry(self, i: int, j: int) -> Scalar:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range for {self.cols} columns")
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
            self.ctx,
        )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ContextMismatchError("matrix product across ring contexts")
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for k in range(other.cols):
                acc = self.ctx.zero
                for j in range(self.cols):
                    acc = acc + ai[j] * b[j][k]
                out.append(acc)
        return Matrix(self.rows, other.cols, out, self.ctx)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.ctx == other.ctx
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.ctx, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ctx.render(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def _require_square(self, what: str):
        if not self.is_square:
            raise ShapeError(f"{what} needs a square matrix, got {self.rows}x{self.cols}")

    def det_cofactor(self) -> Scalar:
        """Determinant by first-row Laplace expansion. Exponential; n <= 8."""
        self._require_square("det_cofactor")
        if self.rows > COFACTOR_MAX:
            raise SizeLimitError(
                f"cofactor expansion guarded at n <= {COFACTOR_MAX}, got n={self.rows}"
            )
        return _det_expand(self.to_rows(), self.ctx)

    def det_fast(self) -> Scalar:
        """Determinant by elimination: Bareiss over the rationals (divisions
        stay exact and intermediates stay integral for integral input),
        plain pivoted Gaussian elimination over a prime field."""
        self._require_square("det_fast")
        work = self.to_rows()
        if isinstance(self.ctx, RationalRing):
            return _det_bareiss(work, self.ctx)
        return _det_gauss_field(work, self.ctx)

    def _minor(self, drop_row: int, drop_col: int) -> "Matrix":
        sub = [
            self.entries[i * self.cols + j]
            for i in range(self.rows)
            if i != drop_row
            for j in range(self.cols)
            if j != drop_col
        ]
        return Matrix(self.rows - 1, self.cols - 1, sub, self.ctx)

    def adjugate(self) -> "Matrix":
        """Adjugate: entry (i, j) is (-1)^(i+j) times the determinant of the
        matrix with row j and column i removed. For the 1x1 matrix the empty
        minor has determinant 1, so the adjugate is [[1]]. Satisfies
        A * adj(A) = adj(A) * A = det(A) * I in any commutative ring."""
        self._require_square("adjugate")
        n = self.rows
        if n == 1:
            return Matrix(1, 1, [self.ctx.one], self.ctx)
        out = []
        for i in range(n):
            for j in range(n):
                d = self._minor(j, i).det_fast()
                out.append(d if (i + j) % 2 == 0 else -d)
        return Matrix(n, n, out, self.ctx)

    def inverse(self) -> "Matrix":
        """Exact inverse as inv(det) * adjugate.

        Raises NotInvertibleError (carrying the determinant) when the
        determinant is not a unit.
        """
        self._require_square("inverse")
        det = self.det_fast()
        if not self.ctx.is_invertible(det):
            raise NotInvertibleError(det, f"matrix is singular: det = {self.ctx.render(det)}")
        scale = self.ctx.inv(det)
        adj = self.adjugate()
        return Matrix(self.rows, self.cols, [scale * e for e in adj.entries], self.ctx)

    def entry_sum(self) -> Scalar:
        acc = self.ctx.zero
        for e in self.entries:
            acc = acc + e
        return acc

    def column_sum(self, j: int) -> Scalar:
        acc = self.ctx.zero
        for e in self.column(j):
            acc = acc + e
        return acc

    def trace(self) -> Scalar:
        self._require_square("trace")
        acc = self.ctx.zero
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc


def _det_expand(rows: list[list], ctx: RingContext) -> Scalar:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = ctx.zero
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        sub = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = a * _det_expand(sub, ctx)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_bareiss(m: list[list], ctx: RationalRing) -> Scalar:
    n = len(m)
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ctx.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = ctx.zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _det_gauss_field(m: list[list], ctx: RingContext) -> Scalar:
    n = len(m)
    det = ctx.one
    negate = False
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if m[r][k] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return ctx.zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            negate = not negate
        pivot = m[k][k]
        det = det * pivot
        inv_pivot = ctx.inv(pivot)
        for i in range(k + 1, n):
            factor = m[i][k] * inv_pivot
            if factor == 0:
                continue
            for j in range(k, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    return -det if negate else det


@dataclass(frozen=True)
class WeightVectors:
    """Weights (xs of length n, ys of length m) for the AB trace identity."""

    xs: tuple
    ys: tuple


def lemma_ab_check(a: Matrix, b: Matrix, w: WeightVectors) -> tuple[Scalar, Scalar]:
    """Evaluate both sides of the weighted double-sum identity

        sum_{i,j} (x_i + y_j) A[i,j] B[j,i]
            = sum_i x_i (AB)[i,i] + sum_j y_j (BA)[j,j]

    for A of shape n x m and B of shape m x n, returning (lhs, rhs). The two
    are equal for every A and B; returning both keeps the check auditable.
    """
    if a.ctx != b.ctx:
        raise ContextMismatchError("A and B live in different ring contexts")
    if b.rows != a.cols or b.cols != a.rows:
        raise ShapeError(
            f"B must be {a.cols}x{a.rows} to pair with {a.rows}x{a.cols} A, got {b.rows}x{b.cols}"
        )
    ctx = a.ctx
    xs = tuple(ctx.coerce(x) for x in w.xs)
    ys = tuple(ctx.coerce(y) for y in w.ys)
    if len(xs) != a.rows or len(ys) != a.cols:
        raise ShapeError(
            f"need {a.rows} x-weights and {a.cols} y-weights, got {len(xs)} and {len(ys)}"
        )
    lhs = ctx.zero
    for i in range(a.rows):
        for j in range(a.cols):
            lhs = lhs + (xs[i] + ys[j]) * a.entry(i, j) * b.entry(j, i)
    ab = a * b
    ba = b * a
    rhs = ctx.zero
    for i in range(a.rows):
        rhs = rhs + xs[i] * ab.entry(i, i)
    for j in range(a.cols):
        rhs = rhs + ys[j] * ba.entry(j, j)
    return lhs, rhs


def border_with_ones(a: Matrix) -> Matrix:
    """Extend a square matrix by a row of ones at the bottom, a column of
    ones at the right, and a zero in the new corner."""
    a._require_square("border_with_ones")
    one, zero = a.ctx.one, a.ctx.zero
    n = a.rows
    out = []
    for i in range(n):
        out.extend(a.row(i))
        out.append(one)
    out.extend([one] * n)
    out.append(zero)
    return Matrix(n + 1, n + 1, out, a.ctx)


def border_det_general(a: Matrix) -> tuple[Scalar, Scalar]:
    """Return (det of the ones-bordered extension of A, entry sum of adj(A)).

    For every square A these satisfy det(B) = -entry_sum(adj(A)); both values
    are returned so the caller can verify rather than trust.
    """
    b = border_with_ones(a)
    return b.det_fast(), a.adjugate().entry_sum()


def matrix_to_json(a: Matrix) -> dict:
    """Render as the interchange form {"rows", "cols", "entries"} with
    entries as per-ring canonical strings, nested by row."""
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[a.ctx.render(e) for e in a.row(i)] for i in range(a.rows)],
    }


def matrix_from_json(obj: dict, ctx: RingContext) -> Matrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"matrix JSON needs rows/cols/entries: {exc}") from exc
    if len(entries) != rows:
        raise ShapeError(f"matrix JSON declares {rows} rows but has {len(entries)}")
    flat = []
    for r in entries:
        if len(r) != cols:
            raise ShapeError(f"matrix JSON declares {cols} cols but a row has {len(r)}")
        flat.extend(r)
    return Matrix(rows, cols, flat, ctx)
