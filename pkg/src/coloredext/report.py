from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of one verification.  A failing report always carries a witness."""

    name: str
    parameters: dict[str, Any]
    passed: bool
    witnesses: list[Any] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            self.witnesses = [{"reason": "unspecified failure"}]

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        out = {
            "check": self.name,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "details": self.details,
        }
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, default=str)
