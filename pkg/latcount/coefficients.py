"""
Coefficient vectors of the count polynomial and the transfer matrices between them

|P_n^d| = c(d,d) n^d + ... + c(d,1) n + c(d,0). Summing the polynomial for
dimension d with Faulhaber's formula gives the polynomial for d + 1, which is
linear in the coefficients: c_{d+1} = M_d c_d with M_d of shape (d+2) x (d+1).
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from cachetools import LRUCache, cached

from .arith import binomial, factorial, format_rational
from .bernoulli import bernoulli_table
from .exceptions import InvalidArgumentError, UnsupportedIndexError
from .identities import elementary_symmetric
from .utils.logger import get_logger

__all__ = [
    "CoeffVector",
    "TransferMatrix",
    "CLOSED_FORM_MAX_J",
    "transfer_matrix",
    "coeff_vector",
    "coeff_closed_form",
    "coeff_via_symmetric_sums",
    "uncorrected_cubic_coefficient",
    "first_row_product",
    "forward_differences",
]

CLOSED_FORM_MAX_J = 4


@dataclass(frozen=True)
class CoeffVector:
    """c(d,d), c(d,d-1), ..., c(d,0)"""

    d: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.d + 1:
            raise InvalidArgumentError(f"coefficient vector for d={self.d} needs {self.d + 1} entries, got {len(self.entries)}",
                                       field_name="entries", received_value=len(self.entries))

    def coefficient(self, power: int) -> Fraction:
        """c(d, power)"""
        return self.entries[self.d - power]

    def evaluate(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in self.entries:
            acc = acc * n + c
        return acc

    def as_strings(self) -> List[str]:
        return [format_rational(c) for c in self.entries]

    def to_latex(self, variable: str = "n") -> str:
        """The polynomial in ``variable``, highest power first"""
        terms = []
        for offset, c in enumerate(self.entries):
            if c == 0:
                continue
            power = self.d - offset
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if magnitude.denominator == 1:
                factor = "" if magnitude == 1 and power else str(magnitude.numerator)
            else:
                factor = rf"\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            if power == 0:
                monomial = ""
            elif power == 1:
                monomial = variable
            else:
                monomial = f"{variable}^{{{power}}}"
            body = " ".join(part for part in (factor, monomial) if part)
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        rendered = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            rendered += f" {sign} {body}"
        return rendered


@dataclass(frozen=True)
class TransferMatrix:
    """Rows map c_d to c_{d+1}"""

    d: int
    rows: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def apply(self, vector: CoeffVector) -> CoeffVector:
        if vector.d != self.d:
            raise InvalidArgumentError(f"matrix for d={self.d} cannot act on a d={vector.d} vector",
                                       field_name="vector", received_value=vector.d)
        product = np.array(self.rows, dtype=object).dot(np.array(vector.entries, dtype=object))
        return CoeffVector(self.d + 1, tuple(Fraction(x) for x in product))


def _require_dimension(d: int) -> None:
    if d < 1:
        raise InvalidArgumentError(f"dimension must be >= 1, got d={d}", field_name="d", received_value=d)


@cached(cache=LRUCache(maxsize=128), lock=threading.RLock())
def transfer_matrix(d: int) -> TransferMatrix:
    """
    M_d: row r gives c(d+1, d+1-r), column i multiplies c(d, d-i)

    - diagonal (i = r <= d): 2/(d+1-r), from the n^(p+1)/(p+1) Faulhaber term
    - i = r - 1: 0, the n^p/2 term cancels against -|P_n^d|
    - i <= r - 2, r <= d: 2 B_{r-i} C(d+1-i, r-i) / (d+1-i)
    - column d (the constant c(d,0)): 2 at row d, 1 at row d+1
    """
    _require_dimension(d)
    table = bernoulli_table(d)
    zero = Fraction(0)
    rows = [[zero] * (d + 1) for _ in range(d + 2)]

    for r in range(d + 1):
        for i in range(min(r, d - 1) + 1):
            if i == r:
                rows[r][i] = Fraction(2, d + 1 - r)
            elif i <= r - 2:
                k = r - i
                rows[r][i] = 2 * table[k] * binomial(d + 1 - i, k) / (d + 1 - i)
    rows[d][d] = Fraction(2)
    rows[d + 1][d] = Fraction(1)

    return TransferMatrix(d, tuple(tuple(row) for row in rows))


_chain: Tuple[CoeffVector, ...] = (CoeffVector(1, (Fraction(1), Fraction(1))),)
_chain_lock = threading.Lock()


def coeff_vector(d: int) -> CoeffVector:
    """c_d = M_{d-1} ... M_1 c_1 with c_1 = (1, 1); every intermediate vector is kept"""
    global _chain
    _require_dimension(d)
    chain = _chain
    if len(chain) < d:
        with _chain_lock:
            chain = _chain
            if len(chain) < d:
                get_logger().debug("extending coefficient chain", {"from": len(chain), "to": d})
                grown = list(chain)
                while len(grown) < d:
                    grown.append(transfer_matrix(grown[-1].d).apply(grown[-1]))
                chain = tuple(grown)
                _chain = chain
    return chain[d - 1]


def coeff_closed_form(d: int, j: int) -> Fraction:
    """
    Closed form of c(d, d-j) for j = 0..4

    The j = 3 value is 2^(d-2) d / (6 (d-3)!); see uncorrected_cubic_coefficient
    for the form without the 1/6.
    """
    if not 0 <= j <= CLOSED_FORM_MAX_J:
        raise UnsupportedIndexError(j, f"0..{CLOSED_FORM_MAX_J}")
    _require_dimension(d)
    if d < j:
        raise InvalidArgumentError(f"c(d, d-j) needs d >= j, got d={d}, j={j}", field_name="j", received_value=j)

    power = Fraction(2) ** (d - 1)
    if j == 0:
        return power / factorial(d)
    if j == 1:
        return power / factorial(d - 1)
    if j == 2:
        return Fraction(2) ** (d - 2) * (d + 4) / (6 * factorial(d - 2))
    if j == 3:
        return Fraction(2) ** (d - 2) * d / (6 * factorial(d - 3))
    return Fraction(2) ** (d - 6) * (5 * d * d + 33 * d - 32) / (45 * factorial(d - 4))


def uncorrected_cubic_coefficient(d: int) -> Fraction:
    """2^(d-2) d / (d-3)!, the published j = 3 expression (six times the true c(d, d-3))"""
    if d < 3:
        raise InvalidArgumentError(f"c(d, d-3) needs d >= 3, got d={d}", field_name="d", received_value=d)
    return Fraction(2) ** (d - 2) * d / factorial(d - 3)


def coeff_via_symmetric_sums(d: int, j: int) -> Fraction:
    """
    c(d, d-j) = (1/d!) sum_{k=0}^{d-1} C(d-1, k) (-1)^j e_j(k-1, ..., k-d)

    Each C(d+n-k, d) is prod_{m=1}^{d} (n - (k-m)) / d!, whose n^(d-j)
    coefficient is (-1)^j e_j of the shifts.
    """
    _require_dimension(d)
    if not 0 <= j <= d - 1:
        raise InvalidArgumentError(f"j must lie in 0..{d - 1}, got {j}", field_name="j", received_value=j)

    sign = -1 if j % 2 else 1
    total = sum(
        binomial(d - 1, k) * elementary_symmetric(range(k - 1, k - d - 1, -1), j)
        for k in range(d)
    )
    return Fraction(sign * total, factorial(d))


def first_row_product(d: int) -> Fraction:
    """Product of the leading entries of M_1 .. M_{d-1}; equals 2^(d-1)/d!"""
    _require_dimension(d)
    product = Fraction(1)
    for k in range(1, d):
        product *= transfer_matrix(k).rows[0][0]
    return product


def forward_differences(values: Sequence[Fraction], order: int) -> List[Fraction]:
    """The order-th forward difference sequence of values"""
    current = [Fraction(v) for v in values]
    for _ in range(order):
        current = [b - a for a, b in zip(current, current[1:])]
    return current
