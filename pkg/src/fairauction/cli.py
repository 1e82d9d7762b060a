"""Command-line interface.

    fairauction solve <file> [--format text|json] [--oracle]
    fairauction gen --seed S --resources M --bidders N --max-amount A --out FILE
    fairauction sweep <file> --axis AXIS --grid v1,v2,... --out FILE [--seed S]

Exit codes: 0 success, 1 validation/parse error, 2 internal invariant
violation (e.g. solver/oracle mismatch).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .generator import generate_instance
from .instance_io import dump_instance, load_instance
from .model import AuctionError, InternalInvariantViolation, InvalidInstance
from .report import render_report_json, render_report_text, render_sweep_json
from .settlement import settle
from .sweep import SWEEP_AXES, sweep_propositions
from .wdp import solve_wdp_bruteforce

__all__ = ["OracleMismatch", "main"]

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2


class OracleMismatch(AuctionError):
    """Branch-and-bound disagrees with the brute-force oracle."""


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.file)
    report = settle(instance)
    if args.oracle:
        oracle = solve_wdp_bruteforce(instance)
        if oracle != report.allocation:
            raise OracleMismatch(
                f"solver allocation {report.allocation} != oracle {oracle}"
            )
    if args.format == "json":
        sys.stdout.write(render_report_json(instance, report))
    else:
        sys.stdout.write(render_report_text(instance, report))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    instance = generate_instance(
        seed=args.seed,
        resources=args.resources,
        bidders=args.bidders,
        max_amount=args.max_amount,
    )
    dump_instance(instance, args.out)
    return EXIT_OK


def _parse_grid(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad grid value in {text!r}: {exc}")


def _cmd_sweep(args: argparse.Namespace) -> int:
    instance = load_instance(args.file)
    sweep = sweep_propositions(instance, args.axis, args.grid, seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_sweep_json(sweep))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairauction",
        description="Combinatorial-auction settlement with fairness-adjusted payments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="settle an instance file and print the report")
    solve.add_argument("file", help="instance file (JSON)")
    solve.add_argument("--format", choices=("text", "json"), default="text")
    solve.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the solver against brute-force enumeration",
    )
    solve.set_defaults(func=_cmd_solve)

    gen = sub.add_parser("gen", help="generate a deterministic random instance")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--resources", type=int, required=True, metavar="M")
    gen.add_argument("--bidders", type=int, required=True, metavar="N")
    gen.add_argument("--max-amount", type=int, required=True, metavar="A")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_gen)

    sweep = sub.add_parser("sweep", help="re-settle across a scaling grid")
    sweep.add_argument("file", help="base instance file (JSON)")
    sweep.add_argument("--axis", choices=SWEEP_AXES, required=True)
    sweep.add_argument(
        "--grid", type=_parse_grid, required=True, help="comma-separated scale factors"
    )
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OracleMismatch, InternalInvariantViolation) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except InvalidInstance as exc:
        for violation in exc.violations:
            print(f"error: {violation}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (AuctionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
