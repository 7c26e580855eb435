"""Command-line front end.

Exit codes: 0 success, 1 parse or validation failure, 2 infinite multitype
detected, 3 step cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    InfiniteTypeError,
    MultitypeError,
    NonTerminationError,
)
from .kolar import RunConfig, run
from .oracle import run_mixed_kolar
from .parsing import parse_input
from .reporting import emit_report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multitype",
        description="Compute the Catlin multitype at the origin of a "
        "sum-of-squares hypersurface from its holomorphic generators.",
    )
    parser.add_argument(
        "--input",
        required=True,
        help="path to the input file, or - for stdin",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--trace", action="store_true", help="include the per-step trace (text mode)"
    )
    parser.add_argument(
        "--max-steps", type=int, default=64, help="step cap before giving up"
    )
    parser.add_argument(
        "--beta",
        type=int,
        default=None,
        help="truncate generators to this total degree before running",
    )
    parser.add_argument(
        "--strategy",
        choices=("greedy", "exhaustive"),
        default="greedy",
        help="variable-elimination search strategy",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="also run the real-valued oracle and compare final weights",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        truncation_order=args.beta,
        max_steps=args.max_steps,
        strategy=args.strategy,
        cross_check=args.verify,
        output_format=args.format,
    )
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        spec = parse_input(text, config)
        report = run(spec.generators, spec.config)
        if args.verify:
            oracle_report = run_mixed_kolar(spec.generators, spec.config)
            if oracle_report.final_weight != report.final_weight:
                print(
                    "verification FAILED: ideal computation gives "
                    f"{report.final_weight}, oracle gives "
                    f"{oracle_report.final_weight}",
                    file=sys.stderr,
                )
                return 1
    except InfiniteTypeError as exc:
        print(f"infinite type: {exc}", file=sys.stderr)
        return 2
    except NonTerminationError as exc:
        print(f"no termination: {exc}", file=sys.stderr)
        return 3
    except MultitypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print(
        emit_report(
            report,
            format=args.format,
            names=spec.variable_names,
            trace=args.trace,
        )
    )
    if args.verify:
        print("verification passed: oracle agrees on the final weight", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
