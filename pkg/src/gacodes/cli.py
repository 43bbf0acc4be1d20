"""Command-line entry point: ``gacodes <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .distance import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TRIALS, exact_dX, exact_dZ, kernel_dimension
from .emit import FORMATS, emit, record
from .gbsnf import gb_dimension, poly_from_cyclic
from .gf import gf_new
from .golden import verify_golden
from .groups import group_cyclic
from .harness import DistancePolicy, EnumerationJob, code_report, enumerate_codes
from .parse import ParseError, parse_algebra_elem, parse_group_spec
from .twoblock import TwoBlockCode, components, css_dimension


def _aliases(pairs: Sequence[str] | None) -> dict[str, str] | None:
    if not pairs:
        return None
    out = {}
    for item in pairs:
        src, sep, dst = item.partition("=")
        if not sep or not src or not dst:
            raise ValueError(f"alias must look like NAME=GEN, got {item!r}")
        out[src.strip()] = dst.strip()
    return out


def _policy(args: argparse.Namespace) -> DistancePolicy:
    return DistancePolicy(budget=args.exact_budget, trials=args.trials, seed=args.seed)


def _build(args: argparse.Namespace) -> tuple[TwoBlockCode, str]:
    G = parse_group_spec(args.group)
    F = gf_new(args.field)
    al = _aliases(args.alias)
    return TwoBlockCode(parse_algebra_elem(args.a, G, F, al), parse_algebra_elem(args.b, G, F, al)), args.group


def cmd_params(args: argparse.Namespace) -> int:
    code, spec = _build(args)
    print(json.dumps(record(code_report(code, spec, _policy(args)))))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    job = EnumerationJob(
        group=args.group,
        wa=args.wa,
        wb=args.wb,
        p=args.field,
        connected_only=args.connected_only,
        k_min=args.kmin,
        policy=_policy(args),
        dedup=args.dedup,
    )
    stream = enumerate_codes(job)
    if args.out:
        count = emit(stream, args.format, args.out)
        print(f"{count} codes written to {args.out}", file=sys.stderr)
    else:
        emit(stream, args.format, sys.stdout)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    code, _ = _build(args)
    for i, comp in enumerate(components(code)):
        entry = {"component": i, "size": len(comp.coset), "n": comp.H_X.cols, "k": css_dimension(comp.H_X, comp.H_Z)}
        if entry["k"] and all(2 ** kernel_dimension(H) <= args.exact_budget for H in (comp.H_X, comp.H_Z)):
            entry["dx"] = int(exact_dX(comp.H_X, comp.H_Z, args.exact_budget).value)
            entry["dz"] = int(exact_dZ(comp.H_X, comp.H_Z, args.exact_budget).value)
        print(json.dumps(entry))
    return 0


def cmd_gbdim(args: argparse.Namespace) -> int:
    G = group_cyclic(args.ell)
    F = gf_new(args.field)
    gen = G.generator("x")
    a = poly_from_cyclic(parse_algebra_elem(args.a, G, F), gen)
    b = poly_from_cyclic(parse_algebra_elem(args.b, G, F), gen)
    print(gb_dimension(a, b, args.ell))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for res in verify_golden(args.dataset, args.exact_budget, args.trials, args.check_trials, args.seed):
        print(res.line(), flush=True)
        failures += not res.passed
    print(f"{failures} failure(s)", file=sys.stderr)
    return 1 if failures else 0


def _add_policy(p: argparse.ArgumentParser, trials: int | None = DEFAULT_TRIALS, seed: int | None = DEFAULT_SEED) -> None:
    p.add_argument("--exact-budget", type=int, default=DEFAULT_BUDGET, help="largest span size enumerated exactly")
    p.add_argument("--trials", type=int, default=trials, help="information-set trials beyond the budget")
    p.add_argument("--seed", type=int, default=seed)


def _add_code(p: argparse.ArgumentParser) -> None:
    p.add_argument("group", help='group spec, e.g. "C4xC2", "D6", "M(5,8,4)", "perm:x=(1,2,3);y=(1,2)(3,4)"')
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--field", type=int, default=2, help="prime p of GF(p)")
    p.add_argument("--alias", action="append", metavar="NAME=GEN", help="rename a generator used in a and b")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gacodes", description="Two-block group-algebra quantum codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="parameters of LP[a,b] as a JSON record")
    _add_code(p)
    _add_policy(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("enumerate", help="search canonical pairs of fixed weights")
    p.add_argument("group")
    p.add_argument("--wa", type=int, required=True)
    p.add_argument("--wb", type=int, required=True)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--dedup", action="store_true", help="keep the first code for each (k, d)")
    p.add_argument("--format", choices=FORMATS, default="jsonl")
    p.add_argument("--out")
    _add_policy(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="double-coset components of LP[a,b]")
    _add_code(p)
    p.add_argument("--exact-budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gbdim", help="2 deg gcd(a, b, x^l - 1)")
    p.add_argument("ell", type=int)
    p.add_argument("a", help='polynomial in x, e.g. "1+x^28"')
    p.add_argument("b")
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_gbdim)

    p = sub.add_parser("verify", help="rebuild the codes of a JSONL dataset and compare parameters")
    p.add_argument("dataset", nargs="?", help="defaults to the bundled dataset")
    _add_policy(p, trials=None, seed=None)
    p.add_argument("--check-trials", type=int, default=None, help="extra trials that must find nothing lighter")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
