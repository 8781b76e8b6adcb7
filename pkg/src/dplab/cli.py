"""Command-line entry point: ``dplab {exact,bruteforce,simulate,verify}``.

Exit status: 0 success, 1 verification failure or brute-force mismatch,
2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import harness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument(
        "--threads", type=_positive, default=os.cpu_count() or 1,
        help="worker processes (results do not depend on this)",
    )

    parser = argparse.ArgumentParser(prog="dplab", description="Exact and simulated costs of dual-pivot quicksort.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="tabulate exact expected costs")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)

    p = sub.add_parser("bruteforce", parents=[common], help="average over all n! inputs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algo", choices=harness.BRUTEFORCE_ALGOS, required=True)

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo estimate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument(
        "--seed", type=lambda s: int(s, 0), default=None,
        help=f"64-bit seed (default: ${harness.SEED_ENV}, else {harness.DEFAULT_SEED})",
    )
    p.add_argument("--target", choices=harness.TARGETS, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=harness.SUITES, required=True)
    return parser


def run(args) -> tuple:
    """Dispatch parsed arguments; returns ``(rows, exit_status)``."""
    if args.command == "exact":
        return harness.cmd_exact(args.n_from, args.n_to), EXIT_OK
    if args.command == "bruteforce":
        rows, ok = harness.cmd_bruteforce(args.n, args.algo, args.threads)
        return rows, EXIT_OK if ok else EXIT_FAIL
    if args.command == "simulate":
        return harness.cmd_simulate(args.n, args.samples, args.target, args.seed, args.threads), EXIT_OK
    rows, ok = harness.cmd_verify(args.suite)
    return rows, EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        rows, status = run(args)
    except ValueError as exc:
        print(f"dplab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = harness.render(rows, args.format)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"dplab: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    if status == EXIT_FAIL:
        print("dplab: verification failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
