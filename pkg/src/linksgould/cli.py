"""
Command-line front end.

Commands:
  alexander <braid> [--strands N] [--var auto|s|t] [--budget B]
  lg2braid --m M --k K [--root R]
  verify <suite> [--max-m M] [--max-k K] [--jobs J] [--format text|json]
  tensor eval --braid WORD [--fixture FILE] [--strands N]

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from math import gcd

from .braid import parse_braid
from .conway import DEFAULT_CROSSING_BUDGET, conway
from .cyclotomic import reduce_at_root
from .diagram import braid_closure
from .errors import (
    CrossingBudgetError,
    FixtureValidationError,
    ParseError,
    PoleAtRootError,
)
from .spectral import lg_closed_2braid
from .tensor import braid_bracket, lg11_fixture, load_fixture, scalar_of
from .verify import SUITES, run_suite
from .version import __version__

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linksgould",
        description="Exact Links-Gould and Alexander-Conway computations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", help="Alexander-Conway polynomial of a braid closure")
    p.add_argument("braid", help="whitespace-separated nonzero integers")
    p.add_argument("--strands", type=int, default=None)
    p.add_argument(
        "--var",
        choices=("auto", "s", "t"),
        default="auto",
        help="output variable; auto prints t when possible, s otherwise",
    )
    p.add_argument("--budget", type=int, default=DEFAULT_CROSSING_BUDGET)

    p = sub.add_parser("lg2braid", help="LG^(m,1) of a closed 2-braid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--root",
        type=int,
        default=None,
        help="evaluate at q = exp(i*pi*ROOT/m) instead of generic q",
    )

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--inject-xi-error",
        action="store_true",
        help=argparse.SUPPRESS,  # test mode: corrupt the eigenvalue table
    )

    p = sub.add_parser("tensor", help="tensor-engine operations")
    tsub = p.add_subparsers(dest="tensor_command", required=True)
    pe = tsub.add_parser("eval", help="evaluate a braid closure with a fixture")
    pe.add_argument("--fixture", default=None, help="fixture JSON (default: built-in LG^(1,1))")
    pe.add_argument("--braid", required=True)
    pe.add_argument("--strands", type=int, default=None)
    return parser


def _cmd_alexander(args) -> int:
    word = parse_braid(args.braid, args.strands)
    value = conway(braid_closure(word), budget=args.budget)
    if args.var == "t" and not value.all_even_powers():
        print(
            "error: value has odd powers of s = t^(1/2); use --var s",
            file=sys.stderr,
        )
        return 2
    var = args.var
    if var == "auto":
        var = "t" if value.all_even_powers() else "s"
    print(value.render(var))
    return 0


def _cmd_lg2braid(args) -> int:
    if args.m < 1:
        print("error: --m must be a positive integer", file=sys.stderr)
        return 2
    value = lg_closed_2braid(args.m, args.k)
    if args.root is None:
        print(value.render())
        return 0
    # exp(i*pi*r/m) only depends on the fraction r/m, so a common factor
    # is removed before reducing; the evaluation point is unchanged.
    g = gcd(abs(args.root), args.m) or 1
    reduced = reduce_at_root(value, args.m // g, args.root // g)
    print(reduced.render())
    print(f"# at q = exp(i*pi*{args.root}/{args.m}), modulo {reduced.modulus()} = 0")
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        max_m=args.max_m,
        max_k=args.max_k,
        jobs=max(1, args.jobs),
        corrupt_eigenvalues=args.inject_xi_error,
    )
    if args.format == "json":
        print(report.to_json(stable=True))
    else:
        print(report)
    return 0 if report.passed else 1


def _cmd_tensor_eval(args) -> int:
    fixture = lg11_fixture() if args.fixture is None else load_fixture(args.fixture)
    word = parse_braid(args.braid, args.strands)
    value = scalar_of(braid_bracket(word, fixture))
    print(value.render())
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "alexander":
            return _cmd_alexander(args)
        if args.command == "lg2braid":
            return _cmd_lg2braid(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "tensor":
            return _cmd_tensor_eval(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossingBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PoleAtRootError, FixtureValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
