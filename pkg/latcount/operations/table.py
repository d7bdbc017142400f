"""
latcount table operation
"""

import argparse
import sys

import pandas as pd

from ..arith import to_decimal
from ..engines import recurrence_table, series_counts
from . import EXIT_OK, OperationBase, emit_json, nonnegative_int, positive_int

TABLE_ENGINES = {
    "series": series_counts,
    "recurrence": recurrence_table,
}


class TableOperation(OperationBase):
    """Materialize |P_0^d| .. |P_n_max^d|"""

    def __init__(self):
        super().__init__("table")

    def run(self, args: argparse.Namespace) -> int:
        table = TABLE_ENGINES[args.engine](args.d, args.n_max)
        counts = [to_decimal(c) for c in table.counts]

        if args.format == "csv":
            frame = pd.DataFrame({"n": range(len(counts)), "count": counts})
            sys.stdout.write(frame.to_csv(index=False, lineterminator="\n"))
        else:
            emit_json({
                "d": table.d,
                "engine": args.engine,
                "rows": [{"n": n, "count": c} for n, c in enumerate(counts)],
            })
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register table CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "table",
        help="Counts for n = 0..n_max at fixed d",
        description="Emit n,count rows (counts as decimal strings) for a fixed dimension",
        epilog="""
Examples:
  latcount table --d 2 --n-max 3
  latcount table --d 5 --n-max 100 --format json --engine recurrence
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=parents
    )

    parser.add_argument("--d", type=positive_int, required=True, help="Dimension (>= 1)")
    parser.add_argument("--n-max", type=nonnegative_int, required=True, help="Largest step count (>= 0)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", help="Output format (default: csv)")
    parser.add_argument("--engine", choices=sorted(TABLE_ENGINES), default="series",
                        help="Row-producing engine (default: series)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = TableOperation()
    return operation.execute(operation.run, args)
