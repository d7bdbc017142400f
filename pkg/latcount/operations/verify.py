"""
latcount verify operation
"""

import argparse

from ..engines import ENGINE_NAMES
from ..utils.ui import display_error, format_table
from ..verification import VerifyReport, run_verification
from . import EXIT_MISMATCH, EXIT_OK, OperationBase, emit_json, emit_lines, nonnegative_int, positive_int


def render_plain(report: VerifyReport) -> list:
    """Human-readable report: count grid, coefficient checks, mismatches, notes"""
    lines = [f"verify d_max={report.d_max} n_max={report.n_max}: {'OK' if report.ok else 'MISMATCH'}", ""]

    rows = []
    for cell in report.grid:
        counts = dict(cell.counts)
        rows.append([cell.d, cell.n] + [counts.get(name, "-") for name in ENGINE_NAMES])
    lines += format_table(["d", "n"] + list(ENGINE_NAMES), rows)

    lines.append("")
    lines += format_table(
        ["d", "j", "matrix", "closed_form", "symmetric_sum"],
        [[c.d, c.j, c.matrix, c.closed_form, c.symmetric_sum] for c in report.coefficient_checks],
    )

    lines.append("")
    lines.append("mismatches: " + (", ".join(report.mismatches) if report.mismatches else "none"))
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


class VerifyOperation(OperationBase):
    """Run the cross-engine and coefficient reconciliation grid"""

    def __init__(self):
        super().__init__("verify")

    def run(self, args: argparse.Namespace) -> int:
        report = run_verification(args.d_max, args.n_max, max_workers=args.workers)

        if args.format == "json":
            emit_json(report.to_dict())
        else:
            emit_lines(render_plain(report))

        if not report.ok:
            display_error(f"{len(report.mismatches)} mismatching cell(s): {', '.join(report.mismatches)}")
            return EXIT_MISMATCH
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register verify CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "verify",
        help="Cross-check every engine and coefficient route",
        description="Compare all counting engines on 1<=d<=d_max, 0<=n<=n_max (brute force within its limit) "
                    "and the matrix, closed-form and symmetric-sum coefficient routes",
        epilog="""
Examples:
  latcount verify
  latcount verify --d-max 10 --n-max 100 --format plain
  LATCOUNT_BRUTE_LIMIT=3,8 latcount verify --d-max 5

Exit status is 2 when any cell disagrees.
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=parents
    )

    parser.add_argument("--d-max", type=positive_int, default=4, help="Largest dimension (default: 4)")
    parser.add_argument("--n-max", type=nonnegative_int, default=10, help="Largest step count (default: 10)")
    parser.add_argument("--format", choices=["json", "plain"], default="json", help="Output format (default: json)")
    parser.add_argument("--workers", type=positive_int, help="Worker threads (default: LATCOUNT_MAX_WORKERS or cpu count + 4)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = VerifyOperation()
    return operation.execute(operation.run, args)
