"""
Executable binomial and symmetric-sum identities

Each identity function computes its sum directly and checks it against the
closed form before returning; a disagreement raises IdentityViolationError.
"""

import itertools
import math
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from cachetools import LRUCache, cached

from .arith import binomial
from .exceptions import IdentityViolationError, InvalidArgumentError

__all__ = [
    "IntRange",
    "weighted_binom_sum",
    "pair_sum",
    "pair_product_sum",
    "elementary_symmetric",
    "symmetric_sum_bruteforce",
    "range_symmetric_sum",
    "range_symmetric_sum_recursive",
]


@dataclass(frozen=True)
class IntRange:
    """Closed integer range lo..hi"""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidArgumentError(f"empty range {self.lo}..{self.hi}", field_name="range",
                                       received_value=(self.lo, self.hi))

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


def weighted_binom_sum(n: int, power: int) -> int:
    """sum_{k=1}^{n} k^power C(n, k) for power 1 or 2"""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}", field_name="n", received_value=n)
    if power not in (1, 2):
        raise InvalidArgumentError(f"power must be 1 or 2, got {power}", field_name="power", received_value=power)

    direct = sum(k ** power * binomial(n, k) for k in range(1, n + 1))
    if power == 1:
        closed = n * 2 ** (n - 1)
    else:
        # n(n+1)2^(n-2) is an integer for every n >= 1
        closed = (n * (n + 1) * 2 ** n) // 4
    if direct != closed:
        raise IdentityViolationError("weighted binomial sum", direct, closed, n=n, power=power)
    return direct


def pair_sum(n: int) -> int:
    """sum_{1<=i<j<=n} (i + j)"""
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}", field_name="n", received_value=n)

    direct = sum(i + j for i, j in itertools.combinations(range(1, n + 1), 2))
    closed = n * (n + 1) * (n - 1) // 2
    if direct != closed:
        raise IdentityViolationError("pair sum", direct, closed, n=n)
    return direct


def pair_product_sum(n: int) -> int:
    """sum_{1<=i<j<=n} i*j"""
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}", field_name="n", received_value=n)

    direct = sum(i * j for i, j in itertools.combinations(range(1, n + 1), 2))
    closed = n * (n + 1) * (3 * n + 2) * (n - 1) // 24
    if direct != closed:
        raise IdentityViolationError("pair product sum", direct, closed, n=n)
    return direct


def _check_order(length: int, j: int) -> None:
    if j < 0 or j > length:
        raise InvalidArgumentError(f"order j={j} outside 0..{length}", field_name="j", received_value=j)


def elementary_symmetric(values: Iterable[int], j: int) -> int:
    """e_j(values) by the one-pass recurrence e_i <- e_i + v * e_{i-1}"""
    values = list(values)
    _check_order(len(values), j)

    e = [1] + [0] * j
    for count, v in enumerate(values, start=1):
        for i in range(min(count, j), 0, -1):
            e[i] += v * e[i - 1]
    return e[j]


def symmetric_sum_bruteforce(values: Sequence[int], j: int) -> int:
    """e_j(values) by enumerating every j-subset"""
    _check_order(len(values), j)
    return sum(math.prod(subset) for subset in itertools.combinations(values, j))


def range_symmetric_sum(span: IntRange, j: int) -> int:
    """sum_{lo<=i_1<...<i_j<=hi} i_1 ... i_j"""
    _check_order(len(span), j)
    return elementary_symmetric(span.values(), j)


_leading_term_cache = LRUCache(maxsize=4096)


@cached(cache=_leading_term_cache, lock=threading.RLock())
def _leading_term_sum(lo: int, hi: int, j: int) -> int:
    if j == 0:
        return 1
    return sum(s * _leading_term_sum(s + 1, hi, j - 1) for s in range(lo, hi - j + 2))


def range_symmetric_sum_recursive(span: IntRange, j: int) -> int:
    """
    Same sum via peeling off the smallest factor:
    S(a, b, j) = sum_{s=a}^{b-j+1} s * S(s+1, b, j-1), S(., ., 0) = 1
    """
    _check_order(len(span), j)
    return _leading_term_sum(span.lo, span.hi, j)
