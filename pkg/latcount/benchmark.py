"""
Engine benchmarking

Times each engine on one (d, n) point and records a digest of the count so
runs of different engines can be cross-checked.
"""

import time
import tracemalloc
from functools import partial
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .arith import to_decimal
from .config import BruteForceLimit
from .engines import WalkSpec, count_bruteforce, get_engine
from .exceptions import InvalidArgumentError
from .utils.logger import get_logger

__all__ = ["BenchRecord", "benchmark_engine", "run_benchmarks", "digests_agree"]


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    d: int
    n: int
    repetitions: int
    min_ns: int
    median_ns: int
    max_ns: int
    peak_memory_kb: float
    digest: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "engine": self.engine,
            "d": self.d,
            "n": self.n,
            "repetitions": self.repetitions,
            "min_ns": self.min_ns,
            "median_ns": self.median_ns,
            "max_ns": self.max_ns,
            "peak_memory_kb": round(self.peak_memory_kb, 1),
            "digest": self.digest,
        }


def benchmark_engine(engine: str, spec: WalkSpec, reps: int, limit: Optional[BruteForceLimit] = None) -> BenchRecord:
    """
    Time ``reps`` evaluations of one engine

    A first untimed run under tracemalloc warms caches, measures peak memory
    and produces the digest.
    """
    if reps < 1:
        raise InvalidArgumentError(f"reps must be >= 1, got {reps}", field_name="reps", received_value=reps)

    func = partial(count_bruteforce, limit=limit) if engine == "brute" else get_engine(engine)

    tracemalloc.start()
    try:
        digest = to_decimal(func(spec))
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()

    timings = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        func(spec)
        timings.append(time.perf_counter_ns() - start)

    samples = np.array(timings, dtype=np.int64)
    record = BenchRecord(
        engine=engine,
        d=spec.d,
        n=spec.n,
        repetitions=reps,
        min_ns=int(samples.min()),
        median_ns=int(np.median(samples)),
        max_ns=int(samples.max()),
        peak_memory_kb=peak / 1024,
        digest=digest,
    )
    get_logger().debug("benchmarked engine", record.to_dict())
    return record


def run_benchmarks(spec: WalkSpec, engines: Sequence[str], reps: int,
                   limit: Optional[BruteForceLimit] = None) -> List[BenchRecord]:
    """One record per engine, sorted by engine name; engines run one after another"""
    return [benchmark_engine(name, spec, reps, limit) for name in sorted(set(engines))]


def digests_agree(records: Sequence[BenchRecord]) -> bool:
    return len({record.digest for record in records}) <= 1
