"""
Counting engines for |P_n^d|, the number of distinct endpoints of an n-step
nearest-neighbour walk on Z^d

Steps are the 2d axis-unit moves (+-e_i). Engines:

- brute      frontier expansion over endpoint sets (ground truth, guarded)
- parity     lattice points with ||x||_1 <= n and ||x||_1 = n (mod 2)
- recurrence dimension-by-dimension prefix-sum recurrence
- closed     sum_k C(d-1, k) C(d+n-k, d)
- series     coefficients of (1+x)^(d-1) / (1-x)^(d+1)
- poly       the degree-d coefficient vector evaluated at n
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import TYPE_CHECKING, Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .arith import binomial, factorial
from .config import BruteForceLimit, load_config
from .exceptions import CorruptedCoefficientsError, InvalidArgumentError, LimitExceededError
from .utils.logger import get_logger

if TYPE_CHECKING:
    from .coefficients import CoeffVector

__all__ = [
    "WalkSpec",
    "SeriesTable",
    "ENGINE_NAMES",
    "ANALYTIC_ENGINES",
    "count_bruteforce",
    "endpoint_set",
    "parity_ball_set",
    "sphere_sizes",
    "count_parity_ball",
    "count_recurrence",
    "recurrence_table",
    "count_closed_form",
    "series_counts",
    "count_polynomial",
    "walk_count",
    "leading_residual",
    "get_engine",
]

Position = Tuple[int, ...]


@dataclass(frozen=True)
class WalkSpec:
    """Dimension d >= 1 and step count n >= 0"""

    d: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got d={self.d}", field_name="d", received_value=self.d)
        if self.n < 0:
            raise InvalidArgumentError(f"step count must be >= 0, got n={self.n}", field_name="n", received_value=self.n)


@dataclass(frozen=True)
class SeriesTable:
    """Counts |P_i^d| for i = 0..n_max at fixed d"""

    d: int
    counts: Tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


# ============================================================================
# BRUTE FORCE
# ============================================================================

def _unit_steps(d: int) -> np.ndarray:
    eye = np.eye(d, dtype=np.int64)
    return np.concatenate([eye, -eye])


def _check_guard(spec: WalkSpec, limit: Optional[BruteForceLimit]) -> None:
    limit = limit or load_config().brute_limit
    if not limit.allows(spec.d, spec.n):
        raise LimitExceededError(spec.d, spec.n, limit.max_d, limit.max_n)


def _endpoint_array(spec: WalkSpec) -> np.ndarray:
    steps = _unit_steps(spec.d)
    frontier = np.zeros((1, spec.d), dtype=np.int64)
    for _ in range(spec.n):
        frontier = np.unique((frontier[:, None, :] + steps[None, :, :]).reshape(-1, spec.d), axis=0)
    return frontier


def count_bruteforce(spec: WalkSpec, limit: Optional[BruteForceLimit] = None) -> int:
    """Enumerate the endpoint set step by step and count it"""
    _check_guard(spec, limit)
    return int(_endpoint_array(spec).shape[0])


def endpoint_set(spec: WalkSpec, limit: Optional[BruteForceLimit] = None) -> FrozenSet[Position]:
    """Every endpoint of an exactly-n-step walk, as coordinate tuples"""
    _check_guard(spec, limit)
    return frozenset(tuple(int(c) for c in row) for row in _endpoint_array(spec))


def parity_ball_set(spec: WalkSpec, limit: Optional[BruteForceLimit] = None) -> FrozenSet[Position]:
    """{x : ||x||_1 <= n, ||x||_1 = n (mod 2)}, built directly from the box [-n, n]^d"""
    _check_guard(spec, limit)
    axis = np.arange(-spec.n, spec.n + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axis] * spec.d), indexing="ij"), axis=-1).reshape(-1, spec.d)
    norms = np.abs(grid).sum(axis=1)
    keep = (norms <= spec.n) & ((norms - spec.n) % 2 == 0)
    return frozenset(tuple(int(c) for c in row) for row in grid[keep])


# ============================================================================
# PARITY BALL
# ============================================================================

def sphere_sizes(d: int, j_max: int) -> List[int]:
    """N_d(j) = #{x in Z^d : ||x||_1 = j} for j = 0..j_max"""
    if d < 1 or j_max < 0:
        raise InvalidArgumentError(f"sphere_sizes needs d >= 1 and j_max >= 0, got d={d}, j_max={j_max}",
                                   received_value=(d, j_max))
    sizes = [1] + [2] * j_max
    for _ in range(d - 1):
        # one more coordinate: |x_d| = 0 contributes N(j), |x_d| = t >= 1 contributes 2 N(j - t)
        prefix = list(accumulate(sizes))
        sizes = [sizes[j] + 2 * (prefix[j - 1] if j else 0) for j in range(j_max + 1)]
    return sizes


def count_parity_ball(spec: WalkSpec) -> int:
    """Lattice points in the radius-n L1 ball whose norm has the parity of n"""
    sizes = sphere_sizes(spec.d, spec.n)
    return sum(sizes[spec.n % 2::2])


# ============================================================================
# RECURRENCE
# ============================================================================

def recurrence_table(d: int, n_max: int) -> SeriesTable:
    """
    Row |P_0^d| .. |P_n_max^d| via |P_n^{d+1}| = 2 sum_{k<=n} |P_k^d| - |P_n^d|,
    starting from |P_n^1| = n + 1
    """
    spec = WalkSpec(d, n_max)
    row = list(range(1, spec.n + 2))
    for _ in range(spec.d - 1):
        row = [2 * prefix - value for prefix, value in zip(accumulate(row), row)]
    return SeriesTable(spec.d, tuple(row))


def count_recurrence(spec: WalkSpec) -> int:
    return recurrence_table(spec.d, spec.n).counts[spec.n]


# ============================================================================
# CLOSED FORM AND GENERATING FUNCTION
# ============================================================================

def count_closed_form(spec: WalkSpec) -> int:
    """sum_{k=0}^{d-1} C(d-1, k) C(d+n-k, d)"""
    d, n = spec.d, spec.n
    return sum(binomial(d - 1, k) * binomial(d + n - k, d) for k in range(d))


def series_counts(d: int, n_max: int) -> SeriesTable:
    """First n_max + 1 coefficients of (1+x)^(d-1) / (1-x)^(d+1)"""
    spec = WalkSpec(d, n_max)
    numerator = np.array([binomial(d - 1, k) for k in range(min(d - 1, n_max) + 1)], dtype=object)

    # 1/(1-x)^(d+1) = sum_m C(d+m, d) x^m
    denominator = [1] * (n_max + 1)
    for m in range(1, n_max + 1):
        denominator[m] = denominator[m - 1] * (d + m) // m

    coefficients = np.convolve(numerator, np.array(denominator, dtype=object))[:spec.n + 1]
    return SeriesTable(d, tuple(int(c) for c in coefficients))


# ============================================================================
# POLYNOMIAL
# ============================================================================

def count_polynomial(spec: WalkSpec, coeffs: "Optional[CoeffVector]" = None) -> int:
    """Evaluate the degree-d count polynomial at n; coeffs default to the transfer-matrix chain"""
    if coeffs is None:
        from .coefficients import coeff_vector
        coeffs = coeff_vector(spec.d)
    if coeffs.d != spec.d:
        raise InvalidArgumentError(f"coefficient vector has dimension {coeffs.d}, expected {spec.d}",
                                   field_name="coeffs", received_value=coeffs.d)

    value = coeffs.evaluate(spec.n)
    if value.denominator != 1:
        raise CorruptedCoefficientsError(
            f"count polynomial for d={spec.d} is not integral at n={spec.n}", d=spec.d, n=spec.n, value=value,
        )
    return value.numerator


# ============================================================================
# AUXILIARY QUANTITIES
# ============================================================================

def walk_count(spec: WalkSpec) -> int:
    """Number of n-step sequences, (2d)^n"""
    return (2 * spec.d) ** spec.n


def leading_residual(d: int, n_values: List[int]) -> List[Fraction]:
    """count(d, n) * d! / 2^(d-1) - n^d for each n; a polynomial of degree <= d - 1 in n"""
    scale = Fraction(factorial(d), 2 ** (d - 1))
    return [count_closed_form(WalkSpec(d, n)) * scale - n ** d for n in n_values]


ENGINES: Dict[str, Callable[[WalkSpec], int]] = {
    "brute": count_bruteforce,
    "parity": count_parity_ball,
    "recurrence": count_recurrence,
    "closed": count_closed_form,
    "series": lambda spec: series_counts(spec.d, spec.n).counts[spec.n],
    "poly": count_polynomial,
}

ENGINE_NAMES: Tuple[str, ...] = tuple(sorted(ENGINES))
ANALYTIC_ENGINES: Tuple[str, ...] = tuple(name for name in ENGINE_NAMES if name != "brute")


def get_engine(name: str) -> Callable[[WalkSpec], int]:
    """Engine function by CLI name"""
    try:
        engine = ENGINES[name]
    except KeyError:
        raise InvalidArgumentError(f"unknown engine {name!r}; choose from {', '.join(ENGINE_NAMES)}",
                                   field_name="engine", received_value=name) from None
    get_logger().debug("engine selected", {"engine": name})
    return engine
