"""
Bernoulli numbers and Faulhaber power sums

Bernoulli numbers use the B_1 = -1/2 convention and come from the defining
recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0. A process-wide table is grown on
demand; it is an immutable tuple swapped in under a lock, so readers never
see a partial table.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from cachetools import LRUCache, cached

from .arith import binomial
from .exceptions import CorruptedCoefficientsError, InvalidArgumentError
from .utils.logger import get_logger

__all__ = [
    "BernoulliTable",
    "FaulhaberPoly",
    "compute_bernoulli_numbers",
    "bernoulli_table",
    "bernoulli",
    "faulhaber_poly",
    "power_sum",
]


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_max_index"""

    max_index: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class FaulhaberPoly:
    """Polynomial in n equal to sum_{k=0}^{n} k^degree; coeffs run from n^(degree+1) down to n^0"""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def evaluate(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * n + c
        return acc

    def evaluate_int(self, n: int) -> int:
        value = self.evaluate(n)
        if value.denominator != 1:
            raise CorruptedCoefficientsError(
                f"Faulhaber polynomial of degree {self.degree} is not integral at n={n}",
                d=self.degree, n=n, value=value,
            )
        return value.numerator


def compute_bernoulli_numbers(max_index: int, seed: Sequence[Fraction] = ()) -> Tuple[Fraction, ...]:
    """
    B_0..B_max_index from the defining recurrence

    Args:
        max_index: Largest index to compute
        seed: Already known prefix B_0..B_{len(seed)-1}; extended, never recomputed

    Returns:
        Tuple of exactly max_index + 1 Fractions
    """
    if max_index < 0:
        raise InvalidArgumentError(f"Bernoulli index must be >= 0, got {max_index}", field_name="k", received_value=max_index)

    values = list(seed[:max_index + 1]) or [Fraction(1)]
    for m in range(len(values), max_index + 1):
        s = sum((binomial(m + 1, j) * values[j] for j in range(m)), Fraction(0))
        values.append(-s / (m + 1))
    return tuple(values)


_table: Tuple[Fraction, ...] = (Fraction(1),)
_table_lock = threading.Lock()


def bernoulli_table(max_index: int) -> BernoulliTable:
    """Shared table covering at least B_0..B_max_index, truncated to exactly that range"""
    if max_index < 0:
        raise InvalidArgumentError(f"Bernoulli index must be >= 0, got {max_index}", field_name="k", received_value=max_index)
    global _table
    current = _table
    if len(current) <= max_index:
        with _table_lock:
            current = _table
            if len(current) <= max_index:
                get_logger().debug("growing Bernoulli table", {"from": len(current) - 1, "to": max_index})
                current = compute_bernoulli_numbers(max_index, seed=current)
                _table = current
    return BernoulliTable(max_index, current[:max_index + 1])


def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2"""
    if k < 0:
        raise InvalidArgumentError(f"Bernoulli index must be >= 0, got {k}", field_name="k", received_value=k)
    return bernoulli_table(k)[k]


@cached(cache=LRUCache(maxsize=256), lock=threading.RLock())
def faulhaber_poly(d: int) -> FaulhaberPoly:
    """Coefficients of sum_{k=0}^{n} k^d for d >= 1"""
    if d < 1:
        raise InvalidArgumentError(f"Faulhaber polynomial needs degree >= 1, got {d}", field_name="d", received_value=d)

    table = bernoulli_table(d)
    # index i holds the coefficient of n^(d+1-i)
    coeffs = [Fraction(0)] * (d + 2)
    coeffs[0] = Fraction(1, d + 1)
    coeffs[1] = Fraction(1, 2)
    for k in range(2, d + 1):
        coeffs[k] = table[k] * binomial(d + 1, k) / (d + 1)
    return FaulhaberPoly(d, tuple(coeffs))


def power_sum(n: int, d: int) -> int:
    """sum_{k=0}^{n} k^d, with the d = 0 sum taken as n + 1"""
    if n < 0 or d < 0:
        raise InvalidArgumentError(f"power_sum requires n >= 0 and d >= 0, got n={n}, d={d}",
                                   received_value=(n, d))
    if d == 0:
        return n + 1
    return faulhaber_poly(d).evaluate_int(n)
