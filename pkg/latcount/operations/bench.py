"""
latcount bench operation
"""

import argparse
from typing import List

from ..benchmark import digests_agree, run_benchmarks
from ..config import load_config
from ..engines import ANALYTIC_ENGINES, ENGINE_NAMES, WalkSpec
from ..exceptions import LimitExceededError
from ..utils.ui import display_error, format_duration, format_table
from . import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, OperationBase, emit_json, emit_lines, nonnegative_int, positive_int


def engine_list(text: str) -> List[str]:
    """Comma-separated engine names; ``all`` means every analytic engine"""
    names = [part.strip() for part in text.split(",") if part.strip()]
    if names == ["all"]:
        return list(ANALYTIC_ENGINES)
    unknown = [name for name in names if name not in ENGINE_NAMES]
    if not names or unknown:
        raise argparse.ArgumentTypeError(
            f"engines must be a comma-separated subset of {', '.join(ENGINE_NAMES)} (or 'all'), got {text!r}"
        )
    return names


class BenchOperation(OperationBase):
    """Benchmark engines on one point"""

    def __init__(self):
        super().__init__("bench")

    def run(self, args: argparse.Namespace) -> int:
        config = load_config()
        reps = args.reps or config.bench_reps
        spec = WalkSpec(args.d, args.n)

        try:
            records = run_benchmarks(spec, args.engines, reps, config.brute_limit)
        except LimitExceededError as e:
            display_error(e.message)
            return EXIT_USAGE

        if args.format == "json":
            emit_json([record.to_dict() for record in records])
        else:
            emit_lines(format_table(
                ["engine", "d", "n", "reps", "min", "median", "peak_kb", "digest"],
                [[r.engine, r.d, r.n, r.repetitions, format_duration(r.min_ns), format_duration(r.median_ns),
                  f"{r.peak_memory_kb:.1f}", r.digest] for r in records],
            ))

        if not digests_agree(records):
            display_error("engine digests disagree: " + ", ".join(f"{r.engine}={r.digest}" for r in records))
            return EXIT_MISMATCH
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register bench CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "bench",
        help="Time engines and compare their results",
        description="Benchmark counting engines on one (d, n) point; exit 2 if their results differ",
        epilog="""
Examples:
  latcount bench --d 8 --n 1000 --engines closed,recurrence --reps 5
  latcount bench --d 1 --n 1 --engines all
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=parents
    )

    parser.add_argument("--d", type=positive_int, required=True, help="Dimension (>= 1)")
    parser.add_argument("--n", type=nonnegative_int, required=True, help="Number of steps (>= 0)")
    parser.add_argument("--engines", type=engine_list, required=True,
                        help="Comma-separated engines, or 'all' for every analytic engine")
    parser.add_argument("--reps", type=positive_int, help="Timed repetitions per engine (default: LATCOUNT_BENCH_REPS or 5)")
    parser.add_argument("--format", choices=["json", "plain"], default="json", help="Output format (default: json)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = BenchOperation()
    return operation.execute(operation.run, args)
