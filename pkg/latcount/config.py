"""
Runtime configuration for latcount

Values come from dataclass defaults, overridden by environment variables
(a ``.env`` file in the working directory is loaded first).
"""

import os
from dataclasses import dataclass, field
from typing import Optional

from dotenv import find_dotenv, load_dotenv

from .exceptions import InvalidArgumentError

BRUTE_LIMIT_ENV = "LATCOUNT_BRUTE_LIMIT"
MAX_WORKERS_ENV = "LATCOUNT_MAX_WORKERS"
BENCH_REPS_ENV = "LATCOUNT_BENCH_REPS"
LOG_LEVEL_ENV = "LATCOUNT_LOG_LEVEL"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class BruteForceLimit:
    """Largest (d, n) the enumerator will accept"""

    max_d: int = 4
    max_n: int = 12

    def allows(self, d: int, n: int) -> bool:
        # the zero-step set is the origin alone in any dimension
        return n == 0 or (d <= self.max_d and n <= self.max_n)


@dataclass
class LatcountConfig:
    """latcount configuration"""

    # Brute-force guard
    brute_max_d: int = 4
    brute_max_n: int = 12

    # Concurrency
    max_workers: int = field(default_factory=lambda: min(32, (os.cpu_count() or 1) + 4))

    # Benchmarking
    bench_reps: int = 5

    # Observability
    log_level: str = "WARNING"

    @property
    def brute_limit(self) -> BruteForceLimit:
        return BruteForceLimit(self.brute_max_d, self.brute_max_n)


def parse_brute_limit(raw: str) -> BruteForceLimit:
    """Parse a ``"d,n"`` pair into a BruteForceLimit"""
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise InvalidArgumentError(
            f"{BRUTE_LIMIT_ENV} must be 'd,n' with non-negative integers, got {raw!r}",
            field_name=BRUTE_LIMIT_ENV,
            received_value=raw,
        )
    return BruteForceLimit(int(parts[0]), int(parts[1]))


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {raw!r}", field_name=name, received_value=raw)
    return value


def load_config(dotenv_path: Optional[str] = None) -> LatcountConfig:
    """Build the configuration from defaults and the environment"""
    load_dotenv(dotenv_path or find_dotenv(usecwd=True))
    config = LatcountConfig()

    raw_limit = os.getenv(BRUTE_LIMIT_ENV)
    if raw_limit:
        limit = parse_brute_limit(raw_limit)
        config.brute_max_d, config.brute_max_n = limit.max_d, limit.max_n

    raw_workers = os.getenv(MAX_WORKERS_ENV)
    if raw_workers:
        config.max_workers = _positive_int(MAX_WORKERS_ENV, raw_workers)

    raw_reps = os.getenv(BENCH_REPS_ENV)
    if raw_reps:
        config.bench_reps = _positive_int(BENCH_REPS_ENV, raw_reps)

    raw_level = os.getenv(LOG_LEVEL_ENV)
    if raw_level:
        level = raw_level.strip().upper()
        if level not in LOG_LEVELS:
            raise InvalidArgumentError(
                f"{LOG_LEVEL_ENV} must be one of {', '.join(LOG_LEVELS)}, got {raw_level!r}",
                field_name=LOG_LEVEL_ENV,
                received_value=raw_level,
            )
        config.log_level = level

    return config
