"""Command-line front end.

Subcommands either compute (build, det, inv, gen) or verify (everything
else). Verification subcommands print reports carrying both the closed
form and the oracle value; exit status 0 means every report passed, 1
means some identity check failed, 2 means the input was unusable.

Specs are JSON: {"kind": "cauchy"|"min", "ring": "rational"|{"prime": p},
"xs": [...], "ys": [...]}. The SPEC argument is a file path, ``-`` for
stdin, or the JSON text itself when it starts with ``{``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys

from . import canary as canary_mod
from . import cauchy, minmat, verify
from .densela import matrix_to_json
from .ring import CauchyKitError, PrimeField, RationalRing, RingContext

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_INPUT = 2


def _parse_ring(text: str) -> RingContext:
    if text == "rational":
        return RationalRing()
    if text.startswith("prime:"):
        try:
            return PrimeField(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise verify.SpecFormatError(f"bad ring {text!r}: {exc}") from exc
    raise verify.SpecFormatError(f'ring must be "rational" or "prime:P", got {text!r}')


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _size_bound(text: str) -> int:
    v = int(text)
    if not 1 <= v <= 8:
        raise argparse.ArgumentTypeError("size bound must be in 1..8")
    return v


def _read_spec_arg(arg: str) -> dict:
    if arg.lstrip().startswith("{"):
        text = arg
    elif arg == "-":
        text = sys.stdin.read()
    else:
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise verify.SpecFormatError(f"spec is not valid JSON: {exc}") from exc
    return obj


def _load_spec(args):
    return verify.spec_from_json(
        _read_spec_arg(args.spec),
        default_ring=_parse_ring(args.ring),
        negate_ys=args.minus_convention,
    )


def _load_cauchy_spec(args) -> cauchy.CauchySpec:
    spec = _load_spec(args)
    if not isinstance(spec, cauchy.CauchySpec):
        raise verify.SpecFormatError("this subcommand needs a cauchy spec")
    return spec


def _load_min_spec(args) -> minmat.MinSpec:
    spec = _load_spec(args)
    if not isinstance(spec, minmat.MinSpec):
        raise verify.SpecFormatError("this subcommand needs a min spec")
    return spec


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit_reports(reports, fmt: str, envelope: dict | None = None) -> None:
    if fmt == "json":
        dicts = [r.to_json_dict() for r in reports]
        if envelope is not None:
            envelope = dict(envelope)
            envelope["reports"] = dicts
            envelope["passed"] = sum(r.passed for r in reports)
            envelope["failed"] = sum(not r.passed for r in reports)
            envelope["ok"] = all(r.passed for r in reports)
            print(_dump(envelope))
        elif len(dicts) == 1:
            print(_dump(dicts[0]))
        else:
            print(_dump(dicts))
    elif fmt == "csv":
        import csv

        w = csv.writer(sys.stdout)
        w.writerow(["identity", "lhs", "rhs", "pass", "seed"])
        for r in reports:
            w.writerow([r.identity, r.lhs, r.rhs, str(r.passed).lower(), r.seed])
    else:
        for r in reports:
            state = "PASS" if r.passed else "FAIL"
            print(f"{r.identity}: lhs={r.lhs} rhs={r.rhs} {state}")
        if len(reports) > 1:
            bad = sum(not r.passed for r in reports)
            print(f"{len(reports) - bad}/{len(reports)} passed")


def _exit_code_for(reports) -> int:
    return EXIT_OK if all(r.passed for r in reports) else EXIT_IDENTITY


def _emit_value(args, payload: dict, text_value: str) -> None:
    if args.format == "text":
        print(text_value)
    else:
        print(_dump(payload))


# ---------------------------------------------------------------------------
# Subcommand handlers


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    ctx = _parse_ring(args.ring)
    if args.kind == "min":
        if not isinstance(ctx, RationalRing):
            raise verify.SpecFormatError("min specs are rational-only")
        spec = verify.random_min_spec(rng, args.n)
    else:
        spec = verify.random_cauchy_spec(
            rng, ctx, args.n, strongly_distinct=not args.allow_degenerate
        )
        if args.allow_degenerate and spec.n >= 2:
            spec = verify.force_repeated_value(rng, spec)
    print(_dump(verify.spec_to_json(spec)))
    return EXIT_OK


def cmd_build(args) -> int:
    spec = _load_spec(args)
    if isinstance(spec, minmat.MinSpec):
        m = minmat.build(spec)
    else:
        m = cauchy.build(spec)
    print(_dump(matrix_to_json(m)))
    return EXIT_OK


def cmd_det(args) -> int:
    spec = _load_cauchy_spec(args)
    value = spec.ctx.render(cauchy.det_closed(spec))
    _emit_value(args, {"det": value, "spec_echo": verify.spec_to_json(spec)}, value)
    return EXIT_OK


def cmd_inv(args) -> int:
    spec = _load_cauchy_spec(args)
    print(_dump(matrix_to_json(cauchy.inverse_closed(spec))))
    return EXIT_OK


def _single_check(args, make_report) -> int:
    report = make_report()
    _emit_reports([report], args.format)
    return _exit_code_for([report])


def cmd_invsum(args) -> int:
    spec = _load_cauchy_spec(args)
    return _single_check(args, lambda: verify.check_inverse_entry_sum(spec))


def cmd_adjsum(args) -> int:
    spec = _load_cauchy_spec(args)
    return _single_check(args, lambda: verify.check_adjugate_entry_sum(spec))


def cmd_border(args) -> int:
    spec = _load_cauchy_spec(args)
    return _single_check(args, lambda: verify.check_bordered_det(spec))


def cmd_lemma_ab(args) -> int:
    rng = random.Random(args.seed)
    ctx = _parse_ring(args.ring)
    reports = []
    for _ in range(args.trials):
        n, m = rng.randint(1, args.n), rng.randint(1, args.n)
        reports.append(
            verify.check_lemma_ab(
                verify.random_matrix(rng, ctx, n, m),
                verify.random_matrix(rng, ctx, m, n),
                verify.random_weights(rng, ctx, n, m),
                seed=args.seed,
            )
        )
    _emit_reports(reports, args.format)
    return _exit_code_for(reports)


def cmd_min_det(args) -> int:
    # the determinant closed form wants each vector ascending but no x/y swap
    spec = _load_min_spec(args)
    sorted_spec = minmat.MinSpec(sorted(spec.xs), sorted(spec.ys))
    return _single_check(args, lambda: verify.check_min_det(sorted_spec))


def cmd_min_invsum(args) -> int:
    spec = _load_min_spec(args)
    return _single_check(args, lambda: verify.check_min_inverse_entry_sum(spec))


def cmd_min_colsums(args) -> int:
    spec = minmat.normalize(_load_min_spec(args))
    return _single_check(args, lambda: verify.check_min_column_sums(spec))


def cmd_verify(args) -> int:
    reports = verify.run_suite(args.seed, args.trials, args.n)
    envelope = {
        "command": "verify",
        "seed": args.seed,
        "trials": args.trials,
        "n_max": args.n,
    }
    _emit_reports(reports, args.format, envelope=envelope if args.format == "json" else None)
    return _exit_code_for(reports)


def cmd_canary(args) -> int:
    sizes = [n for n in (3, 6, 9, 12) if n <= args.n] or [args.n]
    reports = []
    for n in sizes:
        closed, gauss = canary_mod.run_canary(canary_mod.hilbert_spec(n))
        reports.extend([closed, gauss])
    if args.format == "json":
        print(_dump([dataclasses.asdict(r) for r in reports]))
    elif args.format == "text":
        print(f"{'n':>3} {'method':>12} {'entry_sum_residual':>20} {'identity_residual':>20}")
        for r in reports:
            print(f"{r.n:>3} {r.method:>12} {r.entry_sum_residual:>20.6e} {r.identity_residual:>20.6e}")
    else:
        print(canary_mod.CSV_HEADER)
        for r in reports:
            print(r.csv_row())
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cauchykit",
        description="Exact Cauchy/min matrix identities, verified against brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec_arg=True, n_type=_size_bound, n_default=6, n_help="max random size, 1..8 (default 6)"):
        if spec_arg:
            p.add_argument("spec", help="spec file path, '-' for stdin, or inline JSON")
        p.add_argument("--ring", default="rational", help="rational | prime:P (default rational)")
        p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        p.add_argument("--trials", type=_positive_int, default=20, help="random trials (default 20)")
        p.add_argument("--n", type=n_type, default=n_default, help=n_help)
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="json", help="output format"
        )
        p.add_argument(
            "--minus-convention",
            action="store_true",
            help="negate the ys on ingestion (input uses 1/(x - y) entries)",
        )
        p.add_argument(
            "--allow-degenerate",
            action="store_true",
            help="gen: skip the strong-distinctness rejection and force a repeat",
        )

    specs = {
        "gen": (cmd_gen, False, "emit a random spec"),
        "build": (cmd_build, True, "build the matrix for a spec"),
        "det": (cmd_det, True, "closed-form determinant"),
        "inv": (cmd_inv, True, "closed-form inverse matrix"),
        "invsum": (cmd_invsum, True, "check the inverse entry-sum identity"),
        "adjsum": (cmd_adjsum, True, "check the adjugate entry-sum identity"),
        "border": (cmd_border, True, "check the bordered-determinant identity"),
        "lemma-ab": (cmd_lemma_ab, False, "check the weighted trace identity on random A, B"),
        "min-det": (cmd_min_det, True, "check the min-matrix determinant closed form"),
        "min-invsum": (cmd_min_invsum, True, "check the min-matrix inverse entry sum"),
        "min-colsums": (cmd_min_colsums, True, "check the min-matrix inverse column sums"),
        "verify": (cmd_verify, False, "run the full seeded identity suite"),
    }
    for name, (handler, needs_spec, help_text) in specs.items():
        p = sub.add_parser(name, help=help_text)
        common(p, spec_arg=needs_spec)
        if name == "gen":
            p.add_argument(
                "--kind", choices=("cauchy", "min"), default="cauchy", help="spec kind to generate"
            )
        p.set_defaults(handler=handler)

    p = sub.add_parser("canary", help="float ill-conditioning canary on Hilbert matrices")
    common(
        p,
        spec_arg=False,
        n_type=_positive_int,
        n_default=12,
        n_help="largest Hilbert size; the ladder 3, 6, 9, 12 is filtered to <= n (default 12)",
    )
    p.set_defaults(handler=cmd_canary)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CauchyKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
