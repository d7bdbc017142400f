"""
latcount - exact counts of distinct endpoints of nearest-neighbour walks on Z^d

The number |P_n^d| of lattice points reachable by exactly n unit steps along the
coordinate axes, computed by several independent engines (brute-force enumeration,
parity-ball sums, a dimension recurrence, a binomial closed form, a generating-function
series and an exact polynomial in n) together with the Bernoulli/Faulhaber machinery,
transfer matrices and symmetric-sum identities behind the polynomial's coefficients.
"""

__version__ = "1.0.0"

from .arith import binomial, from_decimal, rational, to_decimal
from .bernoulli import bernoulli, bernoulli_table, faulhaber_poly, power_sum
from .coefficients import (
    CoeffVector,
    TransferMatrix,
    coeff_closed_form,
    coeff_vector,
    coeff_via_symmetric_sums,
    transfer_matrix,
)
from .config import BruteForceLimit, LatcountConfig, load_config
from .engines import (
    ENGINE_NAMES,
    SeriesTable,
    WalkSpec,
    count_bruteforce,
    count_closed_form,
    count_parity_ball,
    count_polynomial,
    count_recurrence,
    get_engine,
    series_counts,
)
from .exceptions import LatcountError
from .identities import IntRange, range_symmetric_sum

__all__ = [
    "__version__",
    "binomial", "rational", "to_decimal", "from_decimal",
    "bernoulli", "bernoulli_table", "faulhaber_poly", "power_sum",
    "CoeffVector", "TransferMatrix", "coeff_vector", "transfer_matrix",
    "coeff_closed_form", "coeff_via_symmetric_sums",
    "BruteForceLimit", "LatcountConfig", "load_config",
    "WalkSpec", "SeriesTable", "ENGINE_NAMES", "get_engine",
    "count_bruteforce", "count_parity_ball", "count_recurrence",
    "count_closed_form", "count_polynomial", "series_counts",
    "LatcountError",
    "IntRange", "range_symmetric_sum",
]
