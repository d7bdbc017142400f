#!/usr/bin/env python3
"""
latcount command-line hub
Unified entry point for all latcount operations

Usage:
    latcount count --d D --n N [--engine ENGINE] [--format json|plain]
    latcount table --d D --n-max N [--format csv|json]
    latcount poly --d D [--format json|latex]
    latcount verify [--d-max D] [--n-max N] [--format json|plain]
    latcount bench --d D --n N --engines E1,E2 [--reps R]
    latcount bernoulli --k-max K [--format json|plain]
    latcount --help
"""

import argparse
import difflib
import importlib
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from . import __version__
from .config import load_config
from .exceptions import LatcountError
from .operations import EXIT_INTERNAL, EXIT_USAGE, get_operation_info
from .utils.logger import LogLevel, get_logger, setup_logging
from .utils.ui import Colors, display_error


class HubArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1; exit status 2 means a result mismatch"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def create_global_parser() -> argparse.ArgumentParser:
    """Create shared parser for global flags used by all commands"""
    global_parser = HubArgumentParser(add_help=False)

    global_parser.add_argument("--verbose", "-v", action="store_true",
                               help="Enable verbose (debug) logging on stderr")
    global_parser.add_argument("--quiet", "-q", action="store_true",
                               help="Log errors only")
    global_parser.add_argument("--log-dir", type=Path,
                               help="Also write a debug log file to this directory")

    return global_parser


def create_parser():
    """Create the main CLI parser and attach subcommand parsers"""
    global_parser = create_global_parser()

    parser = HubArgumentParser(
        prog="latcount",
        description="Exact counts of distinct endpoints of nearest-neighbour lattice walks",
        epilog="""
Examples:
  latcount count --d 3 --n 4
  latcount table --d 2 --n-max 10
  latcount verify --format plain
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[global_parser]
    )

    parser.add_argument("--version", action="version", version=f"latcount v{__version__}")

    subparsers = parser.add_subparsers(
        dest="operation",
        title="Operations",
        description="Operations to perform"
    )

    return parser, subparsers, global_parser


def setup_global_environment(args: argparse.Namespace) -> None:
    """Set up logging based on flags and configuration"""
    if args.quiet:
        level = LogLevel.ERROR
    elif args.verbose:
        level = LogLevel.DEBUG
    else:
        level = LogLevel.from_name(load_config().log_level)

    setup_logging("latcount", log_dir=args.log_dir, console_level=level)

    logger = get_logger()
    logger.debug(f"latcount called with operation: {getattr(args, 'operation', None)}")


def load_operation_module(name: str):
    """Import ``latcount.operations.<name>``"""
    try:
        return importlib.import_module(f"{__package__}.operations.{name}")
    except ImportError as e:
        get_logger().error(f"Module '{name}' failed to load: {e}")
        return None


def register_operation_parsers(subparsers, global_parser) -> Dict[str, Callable]:
    """Register subcommand parsers and map operation names to their run functions"""
    operations = {}
    for name in get_operation_info():
        module = load_operation_module(name)
        if module and hasattr(module, "register_parser") and hasattr(module, "run"):
            module.register_parser(subparsers, global_parser)
            operations[name] = module.run
    return operations


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    # counts outgrow the default int -> str digit limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    try:
        parser, subparsers, global_parser = create_parser()
        operations = register_operation_parsers(subparsers, global_parser)
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        if not args.operation:
            if not args.quiet:
                print(f"{Colors.CYAN}Available operations:{Colors.RESET}", file=sys.stderr)
                for op, desc in get_operation_info().items():
                    print(f"  {op:<12} {desc}", file=sys.stderr)
            return EXIT_USAGE

        if args.operation not in operations:
            close = difflib.get_close_matches(args.operation, operations.keys(), n=1)
            suggestion = f"Did you mean: {close[0]}?" if close else ""
            display_error(f"Unknown operation: '{args.operation}'. {suggestion}")
            return EXIT_USAGE

        setup_global_environment(args)
        get_logger().info(f"Executing operation: {args.operation}")
        return operations[args.operation](args)

    except KeyboardInterrupt:
        print(f"\n{Colors.YELLOW}Operation cancelled by user{Colors.RESET}", file=sys.stderr)
        return 130
    except LatcountError as e:
        get_logger().debug("operation failed", e.to_dict())
        display_error(e.message)
        return EXIT_USAGE
    except Exception as e:
        get_logger().exception(f"Unhandled error: {e}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
