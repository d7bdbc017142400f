"""
Console UI helpers for latcount
Colours and aligned tables for human-readable (plain) output
"""

from typing import List, Sequence, TextIO
import sys

import colorama
from colorama import Fore, Style

colorama.init()


class Colors:
    """Color constants for console output"""
    RED = Fore.RED
    YELLOW = Fore.YELLOW
    BLUE = Fore.BLUE
    CYAN = Fore.CYAN
    WHITE = Fore.WHITE
    RESET = Style.RESET_ALL
    BRIGHT = Style.BRIGHT


def display_error(message: str, stream: TextIO = None) -> None:
    """Display error message on stderr"""
    print(f"{Colors.RED}[✗] {message}{Colors.RESET}", file=stream or sys.stderr)


def display_warning(message: str, stream: TextIO = None) -> None:
    """Display warning message on stderr"""
    print(f"{Colors.YELLOW}[!] {message}{Colors.RESET}", file=stream or sys.stderr)


def format_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> List[str]:
    """
    Render rows as aligned, pipe-separated lines

    Args:
        headers: Column headers
        rows: Data rows

    Returns:
        Header line, separator line, then one line per row (no colour codes,
        so the result is safe to write to files and pipes)
    """
    col_widths = [len(header) for header in headers]
    for row in rows:
        for i, cell in enumerate(row):
            if i < len(col_widths):
                col_widths[i] = max(col_widths[i], len(str(cell)))

    header_line = " | ".join(f"{header:<{col_widths[i]}}" for i, header in enumerate(headers))
    lines = [header_line, "-" * len(header_line)]
    for row in rows:
        lines.append(" | ".join(f"{str(cell):<{col_widths[i]}}" for i, cell in enumerate(row)))
    return lines


def format_duration(nanoseconds: float) -> str:
    """Format a duration given in nanoseconds"""
    if nanoseconds < 1_000:
        return f"{nanoseconds:.0f}ns"
    if nanoseconds < 1_000_000:
        return f"{nanoseconds / 1_000:.1f}µs"
    if nanoseconds < 1_000_000_000:
        return f"{nanoseconds / 1_000_000:.1f}ms"
    return f"{nanoseconds / 1_000_000_000:.2f}s"
