"""
Error hierarchy for latcount

Every failure raised by the library carries a stable error code and a
details mapping so the CLI can report it uniformly.
"""

from datetime import datetime, timezone
from typing import Any, Dict, Optional


class LatcountError(Exception):
    """Base exception for latcount"""

    def __init__(self, message: str, error_code: str = "GENERAL_ERROR", details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        self.timestamp = datetime.now(timezone.utc).isoformat()
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": True,
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details,
            "timestamp": self.timestamp,
        }


class InvalidArgumentError(LatcountError, ValueError):
    """Precondition violations (dimension, step count, index ranges, config values)"""

    def __init__(self, message: str, field_name: Optional[str] = None, received_value: Any = None):
        super().__init__(
            message,
            "INVALID_ARGUMENT",
            {"field_name": field_name, "received_value": received_value},
        )


class ZeroDenominatorError(LatcountError, ZeroDivisionError):
    """Rational with a zero denominator"""

    def __init__(self, numerator: Optional[int] = None):
        super().__init__("zero denominator", "ZERO_DENOMINATOR", {"numerator": numerator})


class LimitExceededError(LatcountError):
    """Brute-force enumeration requested outside its resource guard"""

    def __init__(self, d: int, n: int, max_d: int, max_n: int):
        super().__init__(
            f"brute-force limit exceeded: d={d}, n={n} (limit d<={max_d}, n<={max_n}); use another engine",
            "LIMIT_EXCEEDED",
            {"d": d, "n": n, "max_d": max_d, "max_n": max_n},
        )


class CorruptedCoefficientsError(LatcountError):
    """Polynomial evaluation produced a non-integer count"""

    def __init__(self, message: str, d: Optional[int] = None, n: Optional[int] = None, value: Any = None):
        super().__init__(
            message,
            "CORRUPTED_COEFFICIENTS",
            {"d": d, "n": n, "value": str(value) if value is not None else None},
        )


class UnsupportedIndexError(LatcountError):
    """Closed form requested for an index with no known formula"""

    def __init__(self, j: int, supported: str = "0..4"):
        super().__init__(
            f"no closed form for c(d, d-{j}); supported j: {supported}",
            "UNSUPPORTED_INDEX",
            {"j": j, "supported": supported},
        )


class IdentityViolationError(LatcountError):
    """A direct sum disagreed with its closed form"""

    def __init__(self, identity: str, direct: Any, closed: Any, **params: Any):
        super().__init__(
            f"{identity}: direct value {direct} != closed form {closed}",
            "IDENTITY_VIOLATION",
            {"identity": identity, "direct": str(direct), "closed": str(closed), **params},
        )
