import json
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path
from typing import Any, Literal

import pandas as pd

from gaugekit.records import CheckResult, CheckStatus

MANIFEST_PATH = Path(__file__).parent / "manifest.json"


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    kind: Literal["hard", "info"]
    description: str


@cache
def load_manifest() -> tuple[ManifestEntry, ...]:
    """The registered checks, in report order."""
    with open(MANIFEST_PATH) as f:
        data = json.load(f)
    entries = tuple(ManifestEntry(**entry) for entry in data["checks"])
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise ValueError("duplicate check names in the verify manifest")
    return entries


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of `run_verify` on one instance."""

    instance_id: str
    """SHA-256 of the canonical geometry JSON of `K` and `C`."""

    seed: int
    """Seed of the randomized parts of the checks."""

    checks: list[CheckResult] = field(default_factory=list)
    """One result per manifest entry, in manifest order."""

    @property
    def hard_failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.hard_failures

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_json(self) -> dict[str, Any]:
        return {
            "instance_id": self.instance_id,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "name": c.name,
                    "status": c.status.value,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                    "tolerance": c.tolerance,
                    "detail": c.detail,
                }
                for c in self.checks
            ]
        )

    def to_text(self) -> str:
        """Human-readable table followed by a summary line."""
        frame = self.to_frame().drop(columns=["detail"])
        table = frame.to_string(index=False, float_format=lambda v: f"{v:.6g}")
        failed = len(self.hard_failures)
        summary = (
            f"instance {self.instance_id[:12]}  seed {self.seed}  "
            f"{len(self.checks)} checks, {failed} hard failure{'s' if failed != 1 else ''}"
        )
        return f"{table}\n\n{summary}"
