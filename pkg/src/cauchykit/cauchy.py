"""Cauchy matrices and their exact closed forms.

A Cauchy matrix is defined by parameter vectors x_1..x_n and y_1..y_n with
every pairwise sum x_i + y_j invertible; its (i, j) entry is 1/(x_i + y_j).
This module holds the constructions and closed-form results:

* the determinant as a product of pairwise differences over pairwise sums,
* the invertibility criterion (each vector strongly distinct, meaning
  pairwise differences are invertible),
* per-entry and whole-matrix closed-form inverses (O(n^2) scalar work for
  the full inverse, via precomputed product tables),
* the entry sum of the inverse, which collapses to sum(x) + sum(y),
* the entry sum of the adjugate, (sum(x) + sum(y)) * det, valid with no
  invertibility assumption at all,
* the ones-bordered determinant, -(sum(x) + sum(y)) * det.

Every closed form here has an independent brute-force counterpart in
:mod:`cauchykit.densela`; the test suite holds the two sides together on
thousands of random inputs. Indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .densela import Matrix, border_with_ones
from .ring import CauchyKitError, NotInvertibleError, RingContext, Scalar


class NonInvertiblePairSumError(CauchyKitError):
    """Some x_i + y_j is not invertible, so the matrix cannot be built.

    ``i`` and ``j`` identify the first offending pair (0-based).
    """

    def __init__(self, i: int, j: int):
        super().__init__(f"pair sum x[{i}] + y[{j}] is not invertible")
        self.i = i
        self.j = j


class CauchySpec:
    """Parameter vectors defining a Cauchy matrix over one ring context.

    Construction validates all n^2 pairwise sums up front and fails fast
    with the offending (i, j) rather than deep inside a product later.
    """

    __slots__ = ("xs", "ys", "ctx")

    def __init__(self, xs: Sequence, ys: Sequence, ctx: RingContext):
        xs = tuple(ctx.coerce(x) for x in xs)
        ys = tuple(ctx.coerce(y) for y in ys)
        if len(xs) == 0:
            raise ValueError("need at least one parameter in each vector")
        if len(xs) != len(ys):
            raise ValueError(f"xs has {len(xs)} entries but ys has {len(ys)}")
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                if not ctx.is_invertible(x + y):
                    raise NonInvertiblePairSumError(i, j)
        self.xs = xs
        self.ys = ys
        self.ctx = ctx

    @property
    def n(self) -> int:
        return len(self.xs)

    def weight_sum(self) -> Scalar:
        """sum(x) + sum(y), the quantity the entry-sum identities revolve around."""
        acc = self.ctx.zero
        for x in self.xs:
            acc = acc + x
        for y in self.ys:
            acc = acc + y
        return acc

    def __repr__(self):
        r = self.ctx.render
        return (
            f"CauchySpec(xs=[{', '.join(r(x) for x in self.xs)}], "
            f"ys=[{', '.join(r(y) for y in self.ys)}])"
        )


@dataclass(frozen=True)
class InvertibilityVerdict:
    """Outcome of the strong-distinctness test.

    ``witness`` names the first failing pair as (vector, i, j) with 0-based
    positions, e.g. ("x", 0, 1) when x[0] - x[1] is not invertible.
    """

    invertible: bool
    witness: Optional[tuple[str, int, int]] = None


def build(spec: CauchySpec) -> Matrix:
    """The n x n matrix with entry (i, j) = 1/(x_i + y_j)."""
    ctx = spec.ctx
    entries = [ctx.inv(x + y) for x in spec.xs for y in spec.ys]
    return Matrix(spec.n, spec.n, entries, ctx)


def det_closed(spec: CauchySpec) -> Scalar:
    """Closed-form determinant:

        prod_{i<j} (x_i - x_j)(y_i - y_j)  /  prod_{i,j} (x_i + y_j).

    Empty products are 1, so n = 1 gives 1/(x_1 + y_1).
    """
    ctx = spec.ctx
    num = ctx.one
    n = spec.n
    for i in range(n):
        for j in range(i + 1, n):
            num = num * (spec.xs[i] - spec.xs[j]) * (spec.ys[i] - spec.ys[j])
    den = ctx.one
    for x in spec.xs:
        for y in spec.ys:
            den = den * (x + y)
    return num * ctx.inv(den)


def is_invertible_spec(spec: CauchySpec) -> InvertibilityVerdict:
    """Invertibility test without computing anything matrix-shaped: the
    matrix is invertible iff the x's are pairwise strongly distinct and the
    y's are pairwise strongly distinct (differences invertible)."""
    ctx = spec.ctx
    for name, vec in (("x", spec.xs), ("y", spec.ys)):
        for i in range(len(vec)):
            for j in range(i + 1, len(vec)):
                if not ctx.is_invertible(vec[i] - vec[j]):
                    return InvertibilityVerdict(False, (name, i, j))
    return InvertibilityVerdict(True)


def _require_invertible(spec: CauchySpec):
    verdict = is_invertible_spec(spec)
    if not verdict.invertible:
        name, i, j = verdict.witness
        vec = spec.xs if name == "x" else spec.ys
        raise NotInvertibleError(
            vec[i] - vec[j],
            f"matrix is singular: {name}[{i}] and {name}[{j}] are not strongly distinct",
        )


def inverse_entry_closed(spec: CauchySpec, i: int, j: int) -> Scalar:
    """Single entry of the inverse, directly from the parameters:

        inv[i, j] = prod_k (x_j + y_k)(x_k + y_i)
                    / ( (x_j + y_i) * prod_{k != j} (x_j - x_k)
                                    * prod_{k != i} (y_i - y_k) ).

    The numerator's (x_j + y_k) factor is the one confirmed against the
    adjugate/determinant oracle; see the formula-resolution test.
    """
    _require_invertible(spec)
    n = spec.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"entry ({i}, {j}) out of range for n={n}")
    ctx = spec.ctx
    num = ctx.one
    for k in range(n):
        num = num * (spec.xs[j] + spec.ys[k]) * (spec.xs[k] + spec.ys[i])
    den = spec.xs[j] + spec.ys[i]
    for k in range(n):
        if k != j:
            den = den * (spec.xs[j] - spec.xs[k])
        if k != i:
            den = den * (spec.ys[i] - spec.ys[k])
    return num * ctx.inv(den)


def inverse_closed(spec: CauchySpec) -> Matrix:
    """Whole inverse in O(n^2) scalar operations (plus bignum growth).

    Per-row and per-column products are tabulated once; each entry then
    costs a handful of multiplications and one pairwise-sum inversion.
    """
    _require_invertible(spec)
    ctx = spec.ctx
    n = spec.n
    xs, ys = spec.xs, spec.ys

    col_num = []  # prod_k (x_j + y_k), per column j
    inv_col_den = []  # 1 / prod_{k != j} (x_j - x_k)
    for j in range(n):
        p = ctx.one
        d = ctx.one
        for k in range(n):
            p = p * (xs[j] + ys[k])
            if k != j:
                d = d * (xs[j] - xs[k])
        col_num.append(p)
        inv_col_den.append(ctx.inv(d))

    row_num = []  # prod_k (x_k + y_i), per row i
    inv_row_den = []  # 1 / prod_{k != i} (y_i - y_k)
    for i in range(n):
        p = ctx.one
        d = ctx.one
        for k in range(n):
            p = p * (xs[k] + ys[i])
            if k != i:
                d = d * (ys[i] - ys[k])
        row_num.append(p)
        inv_row_den.append(ctx.inv(d))

    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(
                col_num[j]
                * row_num[i]
                * ctx.inv(xs[j] + ys[i])
                * inv_col_den[j]
                * inv_row_den[i]
            )
    return Matrix(n, n, entries, ctx)


def inverse_entry_sum(spec: CauchySpec) -> Scalar:
    """Entry sum of the inverse. The whole point: it is just sum(x) + sum(y).

    Requires an invertible spec; raises NotInvertibleError otherwise.
    """
    _require_invertible(spec)
    return spec.weight_sum()


def adjugate_entry_sum_closed(spec: CauchySpec) -> Scalar:
    """Entry sum of the adjugate: (sum(x) + sum(y)) * det.

    No invertibility requirement; this is exactly what the adjugate buys
    over the inverse, and the singular case (a repeated parameter) is a
    legitimate input with answer 0.
    """
    return spec.weight_sum() * det_closed(spec)


def bordered_matrix(spec: CauchySpec) -> Matrix:
    """The (n+1) x (n+1) extension: a ones row at the bottom, a ones column
    at the right, and 0 in the corner."""
    return border_with_ones(build(spec))


def bordered_det_closed(spec: CauchySpec) -> Scalar:
    """Determinant of the ones-bordered matrix: -(sum(x) + sum(y)) * det."""
    return -(spec.weight_sum() * det_closed(spec))
