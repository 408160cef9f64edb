"""Floating-point canary: Cauchy inversion as an instability detector.

Inverting a Cauchy matrix in floats (the Hilbert matrix being the classic
case) goes bad quickly as n grows. The exact entry-sum identity gives a
free, O(n)-to-evaluate ground truth: the entries of the true inverse sum
to sum(x) + sum(y) exactly. This module inverts the float image of the
matrix twice, by Gauss-Jordan with partial pivoting and by the closed-form
entry products, and scores each against that exact statistic plus a
max-norm identity residual.

Floats live only here; the rest of the package is exact.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from .cauchy import CauchySpec, build, is_invertible_spec
from .densela import Matrix
from .ring import CauchyKitError, NotInvertibleError, RationalRing


class ExactZeroPivotError(CauchyKitError):
    """Partial pivoting found an exactly zero pivot column (structurally singular)."""


class FloatMatrix:
    """Dense float matrix, row-major, entries required finite."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[float]):
        entries = tuple(float(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} needs {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if not math.isfinite(e):
                raise ValueError(f"non-finite entry {e!r}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_seq) -> "FloatMatrix":
        rows = len(rows_seq)
        cols = len(rows_seq[0])
        flat = []
        for r in rows_seq:
            flat.extend(r)
        return cls(rows, cols, flat)

    @classmethod
    def from_exact(cls, m: Matrix) -> "FloatMatrix":
        if not isinstance(m.ctx, RationalRing):
            raise CauchyKitError("only rational matrices have a float image")
        return cls(m.rows, m.cols, [float(e) for e in m.entries])

    def entry(self, i: int, j: int) -> float:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[float]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    def entry_sum(self) -> float:
        return math.fsum(self.entries)

    def matmul(self, other: "FloatMatrix") -> "FloatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            for k in range(other.cols):
                out.append(math.fsum(a[i][j] * b[j][k] for j in range(self.cols)))
        return FloatMatrix(self.rows, other.cols, out)


@dataclass
class CanaryReport:
    """Score card for one inversion method on one matrix size."""

    n: int
    method: str  # "closed_form" or "gauss_pp"
    entry_sum_residual: float
    identity_residual: float
    elapsed: float

    def csv_row(self) -> str:
        return (
            f"{self.n},{self.method},{self.entry_sum_residual!r},"
            f"{self.identity_residual!r},{self.elapsed!r}"
        )


CSV_HEADER = "n,method,entry_sum_residual,identity_residual,elapsed"


def hilbert_spec(n: int) -> CauchySpec:
    """The Cauchy parameters x_i = i (1-based), y_j = j - 1, whose matrix
    has entries 1/(i + j - 1): the n x n Hilbert matrix."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return CauchySpec(range(1, n + 1), range(0, n), RationalRing())


def invert_gauss_pp(m: FloatMatrix) -> FloatMatrix:
    """Approximate inverse by Gauss-Jordan elimination with partial pivoting,
    the standard generic float algorithm the canary stresses."""
    if m.rows != m.cols:
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    a = m.to_rows()
    inv = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot_row][col] == 0.0:
            raise ExactZeroPivotError(f"zero pivot in column {col}")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        d = a[col][col]
        a[col] = [v / d for v in a[col]]
        inv[col] = [v / d for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f != 0.0:
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
    return FloatMatrix.from_rows(inv)


def invert_closed_float(spec: CauchySpec) -> FloatMatrix:
    """Closed-form inverse evaluated in float arithmetic: the same product
    tables as the exact path, with every operation rounded to 64-bit."""
    if not isinstance(spec.ctx, RationalRing):
        raise CauchyKitError("float evaluation needs rational parameters")
    n = spec.n
    xs = [float(x) for x in spec.xs]
    ys = [float(y) for y in spec.ys]
    col_num, col_den = [], []
    for j in range(n):
        p, d = 1.0, 1.0
        for k in range(n):
            p *= xs[j] + ys[k]
            if k != j:
                d *= xs[j] - xs[k]
        col_num.append(p)
        col_den.append(d)
    row_num, row_den = [], []
    for i in range(n):
        p, d = 1.0, 1.0
        for k in range(n):
            p *= xs[k] + ys[i]
            if k != i:
                d *= ys[i] - ys[k]
        row_num.append(p)
        row_den.append(d)
    out = []
    for i in range(n):
        for j in range(n):
            out.append(col_num[j] * row_num[i] / ((xs[j] + ys[i]) * col_den[j] * row_den[i]))
    return FloatMatrix(n, n, out)


def identity_residual(c: FloatMatrix, c_inv: FloatMatrix) -> float:
    """Max-norm of C * C_inv - I."""
    prod = c.matmul(c_inv)
    worst = 0.0
    for i in range(prod.rows):
        for j in range(prod.cols):
            target = 1.0 if i == j else 0.0
            worst = max(worst, abs(prod.entry(i, j) - target))
    return worst


def run_canary(spec: CauchySpec) -> tuple[CanaryReport, CanaryReport]:
    """Invert the float image of the matrix both ways and score each against
    the exact entry-sum ground truth (converted to float only at the end).
    Returns (closed_form report, gauss_pp report). Deterministic."""
    if not is_invertible_spec(spec).invertible:
        raise NotInvertibleError(None, "canary needs an invertible spec")
    truth = float(spec.weight_sum())
    c_float = FloatMatrix.from_exact(build(spec))

    t0 = time.perf_counter()
    closed = invert_closed_float(spec)
    t_closed = time.perf_counter() - t0

    t0 = time.perf_counter()
    gauss = invert_gauss_pp(c_float)
    t_gauss = time.perf_counter() - t0

    def score(inv: FloatMatrix, method: str, elapsed: float) -> CanaryReport:
        return CanaryReport(
            n=spec.n,
            method=method,
            entry_sum_residual=abs(inv.entry_sum() - truth),
            identity_residual=identity_residual(c_float, inv),
            elapsed=elapsed,
        )

    return score(closed, "closed_form", t_closed), score(gauss, "gauss_pp", t_gauss)
