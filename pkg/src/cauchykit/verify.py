"""Verification reports, spec interchange JSON, and seeded random checks.

Every identity check produces a :class:`VerificationReport` carrying both
the closed-form and oracle values as canonical rendered strings, so a
reader can recompute the pass flag from the report alone. All randomness
is driven by an explicit ``random.Random`` instance; given the same seed,
every generator and the whole suite are bit-reproducible.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Union

from . import cauchy, minmat
from .densela import Matrix, WeightVectors, border_det_general, lemma_ab_check, matrix_to_json
from .ring import (
    CauchyKitError,
    PrimeField,
    RationalRing,
    RingContext,
)


class SpecFormatError(CauchyKitError):
    """The JSON spec is malformed or inconsistent."""


@dataclass
class VerificationReport:
    identity: str
    lhs: str  # closed form
    rhs: str  # oracle
    passed: bool
    spec_echo: dict
    seed: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "spec_echo": self.spec_echo,
            "seed": self.seed,
        }


def _report(identity: str, lhs: str, rhs: str, spec_echo: dict, seed=None) -> VerificationReport:
    return VerificationReport(identity, lhs, rhs, lhs == rhs, spec_echo, seed)


# ---------------------------------------------------------------------------
# Spec interchange JSON


def ring_to_json(ctx: RingContext):
    if isinstance(ctx, RationalRing):
        return "rational"
    return {"prime": ctx.p}


def ring_from_json(obj) -> RingContext:
    if obj == "rational":
        return RationalRing()
    if isinstance(obj, dict) and set(obj) == {"prime"}:
        try:
            return PrimeField(int(obj["prime"]))
        except ValueError as exc:
            raise SpecFormatError(str(exc)) from exc
    raise SpecFormatError(f'ring must be "rational" or {{"prime": p}}, got {obj!r}')


def spec_to_json(spec: Union[cauchy.CauchySpec, minmat.MinSpec]) -> dict:
    if isinstance(spec, cauchy.CauchySpec):
        r = spec.ctx.render
        return {
            "kind": "cauchy",
            "ring": ring_to_json(spec.ctx),
            "xs": [r(x) for x in spec.xs],
            "ys": [r(y) for y in spec.ys],
        }
    out = {
        "kind": "min",
        "ring": "rational",
        "xs": [str(x) for x in spec.xs],
        "ys": [str(y) for y in spec.ys],
    }
    if isinstance(spec, minmat.SortedMinSpec):
        out["swapped"] = spec.swapped
    return out


def spec_from_json(obj: dict, default_ring: RingContext | None = None, negate_ys: bool = False):
    """Parse {"kind", "ring", "xs", "ys"} into a CauchySpec or MinSpec.

    ``kind`` defaults to "cauchy"; ``ring`` defaults to ``default_ring`` or
    rationals. ``negate_ys`` flips the sign of every y on ingestion, for
    inputs written in the 1/(x - y) convention (Cauchy only).
    """
    if not isinstance(obj, dict):
        raise SpecFormatError(f"spec must be a JSON object, got {type(obj).__name__}")
    try:
        xs, ys = obj["xs"], obj["ys"]
    except KeyError as exc:
        raise SpecFormatError(f"spec is missing {exc}") from exc
    kind = obj.get("kind", "cauchy")
    if "ring" in obj:
        ctx = ring_from_json(obj["ring"])
    else:
        ctx = default_ring or RationalRing()
    if kind == "min":
        if not isinstance(ctx, RationalRing):
            raise SpecFormatError("min specs are rational-only")
        if negate_ys:
            raise SpecFormatError("the minus convention applies to cauchy specs only")
        return minmat.MinSpec(xs, ys)
    if kind != "cauchy":
        raise SpecFormatError(f'kind must be "cauchy" or "min", got {kind!r}')
    try:
        xs = [ctx.coerce(x) for x in xs]
        ys = [ctx.coerce(y) for y in ys]
    except (ValueError, TypeError) as exc:
        raise SpecFormatError(f"bad scalar in spec: {exc}") from exc
    if negate_ys:
        ys = [-y for y in ys]
    return cauchy.CauchySpec(xs, ys, ctx)


# ---------------------------------------------------------------------------
# Seeded random generators


def random_scalar(rng: random.Random, ctx: RingContext):
    """Small random scalar: numerator in [-9, 9] over denominator in [1, 9]
    for rationals, a uniform residue for a prime field."""
    if isinstance(ctx, RationalRing):
        from fractions import Fraction

        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return ctx.coerce(rng.randrange(ctx.p))


def random_cauchy_spec(
    rng: random.Random,
    ctx: RingContext,
    n: int,
    strongly_distinct: bool = True,
) -> cauchy.CauchySpec:
    """Rejection-sample a valid spec (all pairwise sums invertible). With
    ``strongly_distinct`` (the default) the spec is also invertible; without
    it, repeated values may occur, which only the adjugate identity accepts.

    Tiny prime fields can make the constraints unsatisfiable (there are
    only p residues to go around), so sampling gives up after a bounded
    number of attempts instead of spinning forever.
    """
    for _ in range(5000):
        xs = [random_scalar(rng, ctx) for _ in range(n)]
        ys = [random_scalar(rng, ctx) for _ in range(n)]
        try:
            spec = cauchy.CauchySpec(xs, ys, ctx)
        except cauchy.NonInvertiblePairSumError:
            continue
        if strongly_distinct and not cauchy.is_invertible_spec(spec).invertible:
            continue
        return spec
    raise CauchyKitError(
        f"could not sample a valid spec with n={n} over this ring; "
        "the constraints look unsatisfiable"
    )


def force_repeated_value(rng: random.Random, spec: cauchy.CauchySpec) -> cauchy.CauchySpec:
    """Copy one parameter over a neighbor so the matrix is singular while
    all pair sums stay valid. Specs with n = 1 are returned unchanged."""
    if spec.n < 2:
        return spec
    xs, ys = list(spec.xs), list(spec.ys)
    i = rng.randrange(spec.n - 1)
    if rng.random() < 0.5:
        xs[i + 1] = xs[i]
    else:
        ys[i + 1] = ys[i]
    return cauchy.CauchySpec(xs, ys, spec.ctx)


def random_min_spec(rng: random.Random, n: int) -> minmat.MinSpec:
    ctx = RationalRing()
    return minmat.MinSpec(
        [random_scalar(rng, ctx) for _ in range(n)],
        [random_scalar(rng, ctx) for _ in range(n)],
    )


def random_matrix(rng: random.Random, ctx: RingContext, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, [random_scalar(rng, ctx) for _ in range(rows * cols)], ctx)


def random_weights(rng: random.Random, ctx: RingContext, n: int, m: int) -> WeightVectors:
    return WeightVectors(
        tuple(random_scalar(rng, ctx) for _ in range(n)),
        tuple(random_scalar(rng, ctx) for _ in range(m)),
    )


# ---------------------------------------------------------------------------
# Identity checks (closed form on the left, oracle on the right)


def render_matrix(m: Matrix) -> str:
    return json.dumps(matrix_to_json(m)["entries"], separators=(",", ":"))


def check_cauchy_det(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    r = spec.ctx.render
    return _report(
        "cauchy_det",
        r(cauchy.det_closed(spec)),
        r(cauchy.build(spec).det_fast()),
        spec_to_json(spec),
        seed,
    )


def check_inverse_entry_sum(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    r = spec.ctx.render
    return _report(
        "inverse_entry_sum",
        r(cauchy.inverse_entry_sum(spec)),
        r(cauchy.build(spec).inverse().entry_sum()),
        spec_to_json(spec),
        seed,
    )


def check_inverse_entrywise(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    return _report(
        "inverse_entrywise",
        render_matrix(cauchy.inverse_closed(spec)),
        render_matrix(cauchy.build(spec).inverse()),
        spec_to_json(spec),
        seed,
    )


def check_adjugate_entry_sum(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    r = spec.ctx.render
    return _report(
        "adjugate_entry_sum",
        r(cauchy.adjugate_entry_sum_closed(spec)),
        r(cauchy.build(spec).adjugate().entry_sum()),
        spec_to_json(spec),
        seed,
    )


def check_bordered_det(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    r = spec.ctx.render
    return _report(
        "bordered_det",
        r(cauchy.bordered_det_closed(spec)),
        r(cauchy.bordered_matrix(spec).det_fast()),
        spec_to_json(spec),
        seed,
    )


def check_border_general(a: Matrix, seed=None) -> VerificationReport:
    det_b, adj_sum = border_det_general(a)
    r = a.ctx.render
    return _report(
        "border_adjugate_sum",
        r(-adj_sum),
        r(det_b),
        {"matrix": matrix_to_json(a), "ring": ring_to_json(a.ctx)},
        seed,
    )


def check_lemma_ab(a: Matrix, b: Matrix, w: WeightVectors, seed=None) -> VerificationReport:
    lhs, rhs = lemma_ab_check(a, b, w)
    r = a.ctx.render
    return _report(
        "weighted_trace_ab",
        r(lhs),
        r(rhs),
        {
            "A": matrix_to_json(a),
            "B": matrix_to_json(b),
            "xs": [r(x) for x in w.xs],
            "ys": [r(y) for y in w.ys],
            "ring": ring_to_json(a.ctx),
        },
        seed,
    )


def check_invertibility_criterion(spec: cauchy.CauchySpec, seed=None) -> VerificationReport:
    verdict = cauchy.is_invertible_spec(spec)
    oracle = spec.ctx.is_invertible(cauchy.det_closed(spec))
    return _report(
        "invertibility_criterion",
        json.dumps(verdict.invertible),
        json.dumps(oracle),
        spec_to_json(spec),
        seed,
    )


def check_min_det(spec: minmat.MinSpec, seed=None) -> VerificationReport:
    return _report(
        "min_det",
        str(minmat.det_closed(spec)),
        str(minmat.build(spec).det_fast()),
        spec_to_json(spec),
        seed,
    )


def check_min_inverse_entry_sum(spec: minmat.MinSpec, seed=None) -> VerificationReport:
    return _report(
        "min_inverse_entry_sum",
        str(minmat.inverse_entry_sum(spec)),
        str(minmat.build(spec).inverse().entry_sum()),
        spec_to_json(spec),
        seed,
    )


def check_min_column_sums(spec: minmat.SortedMinSpec, seed=None) -> VerificationReport:
    closed = minmat.inverse_column_sums(spec)
    inv = minmat.build(spec).inverse()
    oracle = tuple(inv.column_sum(j) for j in range(spec.n))
    return _report(
        "min_inverse_column_sums",
        json.dumps([str(c) for c in closed], separators=(",", ":")),
        json.dumps([str(c) for c in oracle], separators=(",", ":")),
        spec_to_json(spec),
        seed,
    )


# ---------------------------------------------------------------------------
# The seeded suite


def run_suite(seed: int, trials: int, n_max: int) -> list[VerificationReport]:
    """Run every identity check ``trials`` times on seeded random inputs,
    alternating ring contexts where both apply. Deterministic in ``seed``."""
    rng = random.Random(seed)
    rings = (RationalRing(), PrimeField(101))
    reports: list[VerificationReport] = []
    for t in range(trials):
        ctx = rings[t % 2]
        n = rng.randint(1, n_max)

        spec = random_cauchy_spec(rng, ctx, n)
        reports.append(check_cauchy_det(spec, seed))
        reports.append(check_inverse_entry_sum(spec, seed))
        reports.append(check_inverse_entrywise(spec, seed))
        reports.append(check_bordered_det(spec, seed))

        # every other trial, degrade the spec so the adjugate identity and
        # the invertibility criterion see the singular branch too
        probe = force_repeated_value(rng, spec) if t % 2 == 0 else spec
        reports.append(check_adjugate_entry_sum(probe, seed))
        reports.append(check_invertibility_criterion(probe, seed))

        side = rng.randint(1, min(n_max, 5))
        reports.append(check_border_general(random_matrix(rng, ctx, side, side), seed))

        ab_n, ab_m = rng.randint(1, n_max), rng.randint(1, n_max)
        reports.append(
            check_lemma_ab(
                random_matrix(rng, ctx, ab_n, ab_m),
                random_matrix(rng, ctx, ab_m, ab_n),
                random_weights(rng, ctx, ab_n, ab_m),
                seed,
            )
        )

        mspec = random_min_spec(rng, n)
        sorted_spec = minmat.normalize(mspec)
        reports.append(check_min_det(sorted_spec, seed))
        if minmat.build(mspec).det_fast() != 0:
            reports.append(check_min_inverse_entry_sum(mspec, seed))
            reports.append(check_min_column_sums(sorted_spec, seed))
    return reports
