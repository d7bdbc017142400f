"""
latcount bernoulli operation
"""

import argparse

from ..arith import format_rational
from ..bernoulli import bernoulli_table
from . import EXIT_OK, OperationBase, emit_json, emit_lines, nonnegative_int


class BernoulliOperation(OperationBase):

    def __init__(self):
        super().__init__("bernoulli")

    def run(self, args: argparse.Namespace) -> int:
        values = [format_rational(b) for b in bernoulli_table(args.k_max).values]
        if args.format == "json":
            emit_json(values, compact=True)
        else:
            emit_lines(f"B_{k} = {b}" for k, b in enumerate(values))
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register bernoulli CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "bernoulli",
        help="Bernoulli numbers B_0..B_k_max (B_1 = -1/2)",
        description="Exact Bernoulli numbers from the defining recurrence",
        parents=parents
    )

    parser.add_argument("--k-max", type=nonnegative_int, required=True, help="Largest index (>= 0)")
    parser.add_argument("--format", choices=["json", "plain"], default="json", help="Output format (default: json)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = BernoulliOperation()
    return operation.execute(operation.run, args)
