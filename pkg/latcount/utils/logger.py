"""
Logging system for latcount

Console output goes to stderr so stdout stays machine-readable.
"""

import json
import logging
import sys
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from .ui import Colors


class LogLevel(Enum):
    """Log levels"""
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL

    @classmethod
    def from_name(cls, name: str) -> "LogLevel":
        return cls[name.upper()]


class ColorFormatter(logging.Formatter):
    """Prefix and colour console records by level"""

    COLORS = {
        'DEBUG': Colors.WHITE,
        'INFO': Colors.BLUE,
        'WARNING': Colors.YELLOW,
        'ERROR': Colors.RED,
        'CRITICAL': Colors.RED + Colors.BRIGHT,
    }

    PREFIXES = {
        'DEBUG': '[DEBUG]',
        'INFO': '[INFO]',
        'WARNING': '[!]',
        'ERROR': '[✗]',
        'CRITICAL': '[CRITICAL]',
    }

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, Colors.WHITE)
        prefix = self.PREFIXES.get(record.levelname, '[LOG]')
        return f"{color}{prefix} {record.getMessage()}{Colors.RESET}"


class Logger:
    """Console logger with optional file output and structured extras"""

    def __init__(self, name: str = "latcount", log_dir: Optional[Path] = None,
                 console_level: LogLevel = LogLevel.WARNING, file_level: LogLevel = LogLevel.DEBUG):
        """
        Initialize logger

        Args:
            name: Logger name
            log_dir: Directory for log files; no file output when None
            console_level: Minimum level for console output
            file_level: Minimum level for file output
        """
        self.name = name
        self.log_dir = log_dir
        self.console_level = console_level
        self.file_level = file_level
        self.session_start = datetime.now()
        self.log_file: Optional[Path] = None

        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)  # handlers filter
        self.logger.propagate = False
        self.logger.handlers.clear()

        self._setup_console_handler()
        if log_dir is not None:
            self._setup_file_handler()

        self.log_counts: Dict[str, int] = {
            'debug': 0,
            'info': 0,
            'warning': 0,
            'error': 0,
        }

    def _setup_console_handler(self) -> None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(self.console_level.value)
        handler.setFormatter(ColorFormatter())
        self.logger.addHandler(handler)

    def _setup_file_handler(self) -> None:
        try:
            self.log_dir.mkdir(parents=True, exist_ok=True)

            timestamp = self.session_start.strftime("%Y%m%d_%H%M%S")
            log_file = self.log_dir / f"{self.name}_{timestamp}.log"

            handler = logging.FileHandler(log_file, encoding='utf-8')
            handler.setLevel(self.file_level.value)
            handler.setFormatter(logging.Formatter(
                '%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            ))
            self.logger.addHandler(handler)
            self.log_file = log_file

            self._cleanup_old_logs()
        except OSError as e:
            print(f"{Colors.YELLOW}[!] Could not setup file logging: {e}{Colors.RESET}", file=sys.stderr)
            self.log_file = None

    def _cleanup_old_logs(self, keep_count: int = 10) -> None:
        log_files = sorted(self.log_dir.glob(f"{self.name}_*.log"), key=lambda f: f.stat().st_mtime, reverse=True)
        for old_file in log_files[keep_count:]:
            try:
                old_file.unlink()
            except OSError:
                pass

    @staticmethod
    def _format_message(message: str, extra: Optional[Dict[str, Any]] = None) -> str:
        if extra:
            return f"{message} | {json.dumps(extra, default=str, sort_keys=True)}"
        return message

    def debug(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.debug(self._format_message(message, extra))
        self.log_counts['debug'] += 1

    def info(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.info(self._format_message(message, extra))
        self.log_counts['info'] += 1

    def warning(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.warning(self._format_message(message, extra))
        self.log_counts['warning'] += 1

    def error(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.error(self._format_message(message, extra))
        self.log_counts['error'] += 1

    def exception(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log exception with traceback"""
        self.logger.error(self._format_message(message, extra), exc_info=True)
        self.log_counts['error'] += 1

    def log_operation_start(self, operation: str, details: Optional[Dict[str, Any]] = None) -> None:
        self.info(f"Starting: {operation}", details)

    def log_operation_end(self, operation: str, success: bool, duration: float,
                          details: Optional[Dict[str, Any]] = None) -> None:
        status = "SUCCESS" if success else "FAILED"
        self.info(f"Operation {operation} completed: {status} (Duration: {duration:.3f}s)", details)

    def close(self) -> None:
        for handler in self.logger.handlers[:]:
            handler.close()
            self.logger.removeHandler(handler)


_global_logger: Optional[Logger] = None


def get_logger(name: str = "latcount") -> Logger:
    """Get or create global logger instance"""
    global _global_logger

    if _global_logger is None or _global_logger.name != name:
        _global_logger = Logger(name)

    return _global_logger


def setup_logging(name: str = "latcount", log_dir: Optional[Path] = None,
                  console_level: LogLevel = LogLevel.WARNING, file_level: LogLevel = LogLevel.DEBUG) -> Logger:
    """Setup logging with specified configuration"""
    global _global_logger
    if _global_logger is not None:
        _global_logger.close()
    _global_logger = Logger(name, log_dir, console_level, file_level)
    return _global_logger
