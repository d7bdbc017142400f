"""
latcount Operations Module

Each operation module implements:
- register_parser(subparsers, global_parser): Register CLI arguments for the operation
- run(args): Execute the operation and return the process exit code

Exit codes: 0 success, 1 usage or guard error, 2 verification/digest mismatch.
"""

import argparse
import json
import sys
import time
from typing import Any, Callable, Dict

from ..utils.logger import Logger, get_logger

__all__ = ["count", "table", "poly", "verify", "bench", "bernoulli"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


def get_operation_info() -> Dict[str, str]:
    """Operation name -> one-line description"""
    return {
        "count": "Count distinct endpoints of an n-step walk in d dimensions",
        "table": "Emit the counts for n = 0..n_max at fixed d",
        "poly": "Show the count polynomial's coefficient vector",
        "verify": "Cross-check every engine and coefficient route on a grid",
        "bench": "Time engines on one (d, n) point and compare digests",
        "bernoulli": "List Bernoulli numbers B_0..B_k_max",
    }


def positive_int(text: str) -> int:
    value = _int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text!r}")
    return value


def nonnegative_int(text: str) -> int:
    value = _int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text!r}")
    return value


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def emit_json(payload: Any, compact: bool = False) -> None:
    """Write JSON to stdout"""
    if compact:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(json.dumps(payload, indent=2))


def emit_lines(lines) -> None:
    sys.stdout.write("".join(f"{line}\n" for line in lines))


class OperationBase:
    """Base class for operations providing logging and timing"""

    def __init__(self, operation_name: str):
        self.operation_name = operation_name
        self.logger: Logger = get_logger()

    def execute(self, body: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
        """Run ``body`` with start/end logging"""
        details = {k: v for k, v in vars(args).items() if k not in ("operation", "func")}
        self.logger.log_operation_start(self.operation_name, details)
        start = time.perf_counter()
        code = body(args)
        self.logger.log_operation_end(self.operation_name, code == EXIT_OK, time.perf_counter() - start, {"exit_code": code})
        return code
