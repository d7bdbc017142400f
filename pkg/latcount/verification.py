"""
Cross-engine verification

Runs every engine on a (d, n) grid, reconciles the three coefficient routes,
and collects disagreements. Cells are evaluated on a thread pool; the report
is always ordered by d, then n (or j), then engine name.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .arith import format_rational, to_decimal
from .coefficients import (
    CLOSED_FORM_MAX_J,
    coeff_closed_form,
    coeff_vector,
    coeff_via_symmetric_sums,
    uncorrected_cubic_coefficient,
)
from .config import BruteForceLimit, load_config
from .engines import ANALYTIC_ENGINES, WalkSpec, count_bruteforce, get_engine
from .exceptions import InvalidArgumentError
from .utils.logger import get_logger

__all__ = ["CountCell", "CoefficientCheck", "VerifyReport", "run_verification", "cubic_discrepancy_note"]


@dataclass(frozen=True)
class CountCell:
    d: int
    n: int
    counts: Tuple[Tuple[str, str], ...]

    @property
    def cell_id(self) -> str:
        return f"count:d={self.d},n={self.n}"

    @property
    def agrees(self) -> bool:
        return len({value for _, value in self.counts}) <= 1

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "n": self.n, "counts": dict(self.counts)}


@dataclass(frozen=True)
class CoefficientCheck:
    d: int
    j: int
    matrix: str
    closed_form: str
    symmetric_sum: str

    @property
    def cell_id(self) -> str:
        return f"coeff:d={self.d},j={self.j}"

    @property
    def agrees(self) -> bool:
        return self.matrix == self.closed_form == self.symmetric_sum

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "j": self.j,
            "matrix": self.matrix,
            "closed_form": self.closed_form,
            "symmetric_sum": self.symmetric_sum,
        }


@dataclass
class VerifyReport:
    d_max: int
    n_max: int
    grid: List[CountCell] = field(default_factory=list)
    coefficient_checks: List[CoefficientCheck] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d_max": self.d_max,
            "n_max": self.n_max,
            "ok": self.ok,
            "grid": [cell.to_dict() for cell in self.grid],
            "coefficient_checks": [check.to_dict() for check in self.coefficient_checks],
            "mismatches": list(self.mismatches),
            "notes": list(self.notes),
        }


def cubic_discrepancy_note(d: int) -> str:
    """Explain the j = 3 closed form correction with concrete numbers at dimension d"""
    published = format_rational(uncorrected_cubic_coefficient(d))
    correct = format_rational(coeff_vector(d).coefficient(d - 3))
    return (
        "c(d,d-3): the published closed form 2^(d-2)*d/(d-3)! omits a factor 1/6 "
        f"(d={d}: published {published}, matrix and symmetric-sum routes {correct}); "
        "the corrected form 2^(d-2)*d/(6*(d-3)!) is used and is not counted as a mismatch"
    )


def _count_cell(spec: WalkSpec, limit: BruteForceLimit) -> CountCell:
    counts = {name: to_decimal(get_engine(name)(spec)) for name in ANALYTIC_ENGINES}
    if limit.allows(spec.d, spec.n):
        counts["brute"] = to_decimal(count_bruteforce(spec, limit))
    return CountCell(spec.d, spec.n, tuple(sorted(counts.items())))


def _coefficient_check(d: int, j: int) -> CoefficientCheck:
    return CoefficientCheck(
        d=d,
        j=j,
        matrix=format_rational(coeff_vector(d).entries[j]),
        closed_form=format_rational(coeff_closed_form(d, j)),
        symmetric_sum=format_rational(coeff_via_symmetric_sums(d, j)),
    )


def run_verification(d_max: int, n_max: int, limit: Optional[BruteForceLimit] = None,
                     max_workers: Optional[int] = None) -> VerifyReport:
    """
    Verify engine agreement on 1 <= d <= d_max, 0 <= n <= n_max and coefficient
    agreement on 1 <= d <= d_max, 0 <= j <= min(4, d-1)

    Args:
        d_max: Largest dimension
        n_max: Largest step count
        limit: Brute-force guard; brute force joins a cell only inside it
        max_workers: Thread pool size (configured default when None)
    """
    if d_max < 1:
        raise InvalidArgumentError(f"d_max must be >= 1, got {d_max}", field_name="d_max", received_value=d_max)
    if n_max < 0:
        raise InvalidArgumentError(f"n_max must be >= 0, got {n_max}", field_name="n_max", received_value=n_max)

    config = load_config()
    limit = limit or config.brute_limit
    logger = get_logger()
    logger.debug("verification grid", {"d_max": d_max, "n_max": n_max, "brute_limit": [limit.max_d, limit.max_n]})

    # extend the coefficient chain once before fanning out
    coeff_vector(d_max)

    specs = [WalkSpec(d, n) for d in range(1, d_max + 1) for n in range(n_max + 1)]
    checks_wanted = [(d, j) for d in range(1, d_max + 1) for j in range(min(CLOSED_FORM_MAX_J, d - 1) + 1)]

    with ThreadPoolExecutor(max_workers=max_workers or config.max_workers) as executor:
        cell_futures = [executor.submit(_count_cell, spec, limit) for spec in specs]
        check_futures = [executor.submit(_coefficient_check, d, j) for d, j in checks_wanted]
        grid = [future.result() for future in cell_futures]
        checks = [future.result() for future in check_futures]

    report = VerifyReport(d_max, n_max)
    report.grid = sorted(grid, key=lambda cell: (cell.d, cell.n))
    report.coefficient_checks = sorted(checks, key=lambda check: (check.d, check.j))
    report.mismatches = [cell.cell_id for cell in report.grid if not cell.agrees]
    report.mismatches += [check.cell_id for check in report.coefficient_checks if not check.agrees]

    cubic_dims = [check.d for check in report.coefficient_checks if check.j == 3]
    if cubic_dims:
        report.notes.append(cubic_discrepancy_note(cubic_dims[0]))

    if report.mismatches:
        logger.warning("verification found mismatches", {"count": len(report.mismatches)})
    return report
