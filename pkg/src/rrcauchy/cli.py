"""Command-line front end: ``rrcauchy verify <check>``, ``rrcauchy probe speculation``, ``rrcauchy all``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from .errors import InvalidParams
from .harness import (
    IdentityReport,
    Status,
    overall_status,
    probe_speculation,
    run_all,
    verify_borwein,
    verify_cauchy_mod,
    verify_finite_identity,
    verify_genthm,
    verify_macmahon,
    verify_proposition_rsk,
    verify_rr,
    verify_rr_sum_rewrite,
    verify_table1,
    verify_table2,
    verify_xyrr,
)

EXIT_CODES = {Status.PASS: 0, Status.FAIL: 1, Status.INCONCLUSIVE: 3}
MAX_ORDER = 5000


class UsageError(Exception):
    pass


def _bounded(lo: int, hi: int | None = None):
    label = f"an integer in {lo}..{hi}" if hi is not None else f"an integer >= {lo}"

    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {label}, got {text!r}") from None
        if v < lo or (hi is not None and v > hi):
            raise argparse.ArgumentTypeError(f"expected {label}, got {v}")
        return v

    return parse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")


def _add_order(p, default=100):
    p.add_argument("--order", type=_bounded(0, MAX_ORDER), default=default, help=f"truncation order (default {default})")


def _add_ki(p):
    p.add_argument("--k", type=_bounded(1, 8), default=1, help="modulus is 2k+3 (default 1)")
    p.add_argument("--i", type=_bounded(1), default=2, help="deleted residue, 1..2k+2 (default 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrcauchy", description="Exact checks of Cauchy-identity proofs of Rogers-Ramanujan type.")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = top.add_parser("verify", help="run one identity check")
    checks = verify.add_subparsers(dest="check", required=True, parser_class=_Parser)

    def check(name: str, help_: str):
        p = checks.add_parser(name, help=help_)
        _output_flags(p)
        p.add_argument("--mutate", action="store_true", help="perturb one exponent (negative control)")
        return p

    p = check("rr", "sum side vs product side")
    p.add_argument("--which", choices=("first", "second"), default="first")
    _add_order(p)
    _add_order(check("rr-rewrite", "termwise rewrite of the sum side"))
    p = check("cauchy", "row-restricted Cauchy sum vs product")
    _add_ki(p)
    _add_order(p)
    _add_order(check("table1", "n = 1 tableau-pair classes"), 60)
    _add_order(check("table2", "n = 2 tableau-pair classes"), 80)
    p = check("rsk", "RSK bijection on mod-5 partitions")
    p.add_argument("--n-max", type=_bounded(0, 80), default=40)
    p = check("xyrr", "two-variable refinement")
    _add_order(p, 60)
    p.add_argument("--degree-cap", type=_bounded(0, 40), default=8)
    p = check("finite", "finite Gaussian-binomial identity")
    p.add_argument("--n-max", type=_bounded(1, 200), default=30)
    p = check("genthm", "one-row sum at modulus 2k+3")
    _add_ki(p)
    _add_order(p, 80)
    p = check("borwein", "dual Cauchy and the Borwein product")
    p.add_argument("--n-max", type=_bounded(1, 40), default=12)
    _add_order(p, 60)
    p = check("macmahon", "residue vs gap partition counts")
    p.add_argument("--n-max", type=_bounded(0, 400), default=100)

    probe = top.add_parser("probe", help="exploratory probes")
    probes = probe.add_subparsers(dest="probe", required=True, parser_class=_Parser)
    p = probes.add_parser("speculation", help="fit the R-row sum by R-fold products")
    _output_flags(p)
    _add_ki(p)
    p.add_argument("--rows", type=_bounded(1), default=1, help="row bound R, 1..2k (default 1)")
    _add_order(p, 120)
    p.add_argument("--denominator-degree", type=_bounded(0, 40), default=None, help="D (default 2k+1)")
    p.add_argument("--numerator-degree", type=_bounded(0), default=None, help="default D(D+1)/2")
    p.add_argument("--margin", type=_bounded(1), default=None, help="withheld coefficients (default 20%% of order)")
    p.add_argument("--allow-repeats", action="store_true", help="let a residue repeat inside one product")

    p = top.add_parser("all", help="run every identity check")
    _output_flags(p)
    _add_order(p)
    p.add_argument("--jobs", type=_bounded(1, 256), default=None, help="worker processes (default: cores)")
    p.add_argument("--mutate", action="store_true", help=argparse.SUPPRESS)
    return parser


def _check_ki(args) -> None:
    if not 1 <= args.i <= 2 * args.k + 2:
        raise UsageError(f"argument --i: expected an integer in 1..{2 * args.k + 2} for k={args.k}, got {args.i}")


def _verify_call(args) -> Callable[[], IdentityReport]:
    m = args.mutate
    table: dict[str, Callable[[], IdentityReport]] = {
        "rr": lambda: verify_rr(args.which, args.order, mutate=m),
        "rr-rewrite": lambda: verify_rr_sum_rewrite(args.order, mutate=m),
        "cauchy": lambda: verify_cauchy_mod(args.k, args.i, args.order, mutate=m),
        "table1": lambda: verify_table1(args.order, mutate=m),
        "table2": lambda: verify_table2(args.order, mutate=m),
        "rsk": lambda: verify_proposition_rsk(args.n_max, mutate=m),
        "xyrr": lambda: verify_xyrr(args.order, args.degree_cap, mutate=m),
        "finite": lambda: verify_finite_identity(args.n_max, mutate=m),
        "genthm": lambda: verify_genthm(args.k, args.i, args.order, mutate=m),
        "borwein": lambda: verify_borwein(args.n_max, args.order, mutate=m),
        "macmahon": lambda: verify_macmahon(args.n_max, mutate=m),
    }
    if args.check in ("cauchy", "genthm"):
        _check_ki(args)
    return table[args.check]


def _speculation_call(args) -> Callable[[], IdentityReport]:
    _check_ki(args)
    if args.rows > 2 * args.k:
        raise UsageError(f"argument --rows: expected an integer in 1..{2 * args.k} for k={args.k}, got {args.rows}")
    if args.margin is not None and args.margin > args.order:
        raise UsageError(f"argument --margin: expected an integer in 1..{args.order}, got {args.margin}")
    return lambda: probe_speculation(
        args.k,
        args.i,
        args.rows,
        args.order,
        denominator_degree=args.denominator_degree,
        numerator_degree=args.numerator_degree,
        margin=args.margin,
        allow_repeats=args.allow_repeats,
    )


def _text(report: IdentityReport) -> str:
    lines = [report.summary_line()]
    lines += [f"    {d}" for d in report.details]
    lines.append(f"    elapsed {report.elapsed_ms} ms")
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    blob = json.dumps(payload, indent=2)
    print(blob if args.json else text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(blob + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "all":
            reports = run_all(args.order, args.jobs or os.cpu_count(), mutate=args.mutate)
            status = overall_status(reports)
            payload = {"status": status.value, "reports": [r.to_dict() for r in reports]}
            text = "\n".join([_text(r) for r in reports] + [f"overall: {status.value}"])
            _emit(args, payload, text)
            return EXIT_CODES[status]
        call = _verify_call(args) if args.command == "verify" else _speculation_call(args)
        report = call()
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InvalidParams as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    _emit(args, report.to_dict(), _text(report))
    return EXIT_CODES[report.status]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
