"""Structured verification reports.

A report is a flat list of named checks.  Every check carries the measured
residual and the tolerance it was compared against; order checks store the
fitted convergence order and use residual = |order - expected|.  For witness
checks (where the point is that an identity *fails*), pass means the observed
violation reached the required size, i.e. residual >= tolerance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool
    order_estimate: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.residual) or self.residual < 0:
            raise ValueError(f"check {self.name}: residual must be finite and >= 0")

    def to_dict(self) -> dict:
        out = {
            "check_name": self.name,
            "residual": self.residual,
            "tolerance": self.tolerance,
        }
        if self.order_estimate is not None:
            out["order_estimate"] = self.order_estimate
        out["pass"] = self.passed
        return out


@dataclass
class Report:
    command: str
    seed: int
    group: str
    dims: list[int]
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "seed": self.seed,
            "group": self.group,
            "dims": self.dims,
            "checks": [c.to_dict() for c in self.checks],
            "overall_pass": self.overall_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
