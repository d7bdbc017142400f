"""
latcount count operation
"""

import argparse

from ..arith import to_decimal
from ..config import load_config
from ..engines import ENGINE_NAMES, WalkSpec, get_engine
from ..exceptions import LimitExceededError
from ..utils.ui import display_error, display_warning, format_table
from . import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, OperationBase, emit_json, emit_lines, nonnegative_int, positive_int


class CountOperation(OperationBase):
    """Count endpoints with one engine or all of them"""

    def __init__(self):
        super().__init__("count")

    def run(self, args: argparse.Namespace) -> int:
        spec = WalkSpec(args.d, args.n)
        if args.engine == "all":
            return self._run_all(spec, args.format)

        try:
            count = get_engine(args.engine)(spec)
        except LimitExceededError as e:
            display_error(e.message)
            return EXIT_USAGE

        if args.format == "json":
            emit_json({"d": spec.d, "n": spec.n, "engine": args.engine, "count": to_decimal(count)}, compact=True)
        else:
            emit_lines([to_decimal(count)])
        return EXIT_OK

    def _run_all(self, spec: WalkSpec, output_format: str) -> int:
        limit = load_config().brute_limit
        counts = {}
        for name in ENGINE_NAMES:
            if name == "brute" and not limit.allows(spec.d, spec.n):
                display_warning(f"brute force skipped: d={spec.d}, n={spec.n} is outside the limit d<={limit.max_d}, n<={limit.max_n}")
                continue
            counts[name] = to_decimal(get_engine(name)(spec))

        if output_format == "json":
            emit_json({"d": spec.d, "n": spec.n, "engine": "all", "counts": counts}, compact=True)
        else:
            emit_lines(format_table(["engine", "count"], sorted(counts.items())))

        if len(set(counts.values())) > 1:
            display_error(f"engines disagree at d={spec.d}, n={spec.n}: {counts}")
            return EXIT_MISMATCH
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register count CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "count",
        help="Count distinct endpoints of an n-step walk",
        description="Number of distinct lattice points reachable by exactly n nearest-neighbour steps in Z^d",
        epilog="""
Examples:
  latcount count --d 2 --n 2 --engine closed
  latcount count --d 3 --n 5 --engine poly --format json
  latcount count --d 1 --n 0 --engine all --format plain
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=parents
    )

    parser.add_argument("--d", type=positive_int, required=True, help="Dimension (>= 1)")
    parser.add_argument("--n", type=nonnegative_int, required=True, help="Number of steps (>= 0)")
    parser.add_argument(
        "--engine",
        choices=list(ENGINE_NAMES) + ["all"],
        default="closed",
        help="Counting engine (default: closed)"
    )
    parser.add_argument("--format", choices=["json", "plain"], default="json", help="Output format (default: json)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = CountOperation()
    return operation.execute(operation.run, args)
