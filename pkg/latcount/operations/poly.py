"""
latcount poly operation
"""

import argparse

from ..coefficients import coeff_vector
from . import EXIT_OK, OperationBase, emit_json, emit_lines, positive_int


class PolyOperation(OperationBase):
    """Print c_d, from the transfer-matrix chain"""

    def __init__(self):
        super().__init__("poly")

    def run(self, args: argparse.Namespace) -> int:
        vector = coeff_vector(args.d)
        if args.format == "json":
            emit_json(vector.as_strings(), compact=True)
        else:
            emit_lines([vector.to_latex()])
        return EXIT_OK


def register_parser(subparsers, global_parser=None) -> argparse.ArgumentParser:
    """Register poly CLI arguments"""
    parents = [global_parser] if global_parser else []

    parser = subparsers.add_parser(
        "poly",
        help="Coefficient vector of the count polynomial",
        description="Exact coefficients c(d,d), ..., c(d,0) of |P_n^d| as a polynomial in n",
        epilog="""
Examples:
  latcount poly --d 3
  latcount poly --d 5 --format latex
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=parents
    )

    parser.add_argument("--d", type=positive_int, required=True, help="Dimension (>= 1)")
    parser.add_argument("--format", choices=["json", "latex"], default="json", help="Output format (default: json)")

    return parser


def run(args: argparse.Namespace) -> int:
    operation = PolyOperation()
    return operation.execute(operation.run, args)
