"""
Records of individual identity checks, shared by `gaugekit.measures.balls` and
`gaugekit.verify`.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one check: `lhs` compared with `rhs` up to `tolerance`.
    Set relations are recorded as `lhs = gap`, `rhs = 0`.
    """

    name: str
    """Check name, as listed in the verify manifest."""

    lhs: float | str
    """Left-hand side value or a set descriptor."""

    rhs: float | str
    """Right-hand side value or a set descriptor."""

    tolerance: float
    """Allowed deviation."""

    status: CheckStatus
    """`pass`/`fail` for hard checks, `info` for informational ones."""

    detail: str = ""
    """Free-form explanation, e.g. the error raised while evaluating the check."""

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAIL

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "lhs": json_number(self.lhs),
            "rhs": json_number(self.rhs),
            "tolerance": self.tolerance,
            "status": self.status.value,
            "detail": self.detail,
        }


def json_number(value: float | str | None) -> float | str | None:
    """Infinite values become the string `"inf"` (or `"-inf"`), NaN becomes `"nan"`."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
    return value


def compare(
    name: str, lhs: float, rhs: float, tolerance: float, relative: bool = False
) -> CheckResult:
    """
    Hard check `|lhs - rhs| <= tolerance` (times `max(1, |rhs|)` when `relative`).
    Two infinite values of the same sign compare equal.
    """
    if math.isinf(lhs) or math.isinf(rhs):
        ok = lhs == rhs
    else:
        bound = tolerance * max(1.0, abs(rhs)) if relative else tolerance
        ok = abs(lhs - rhs) <= bound
    return CheckResult(name, lhs, rhs, tolerance, CheckStatus.PASS if ok else CheckStatus.FAIL)


def at_most(name: str, lhs: float, rhs: float, tolerance: float) -> CheckResult:
    """Hard check `lhs <= rhs + tolerance`."""
    ok = lhs <= rhs + tolerance
    return CheckResult(name, lhs, rhs, tolerance, CheckStatus.PASS if ok else CheckStatus.FAIL)
