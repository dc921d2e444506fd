"""Pass/fail reports shared by the relation, law, and base verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Check:
    """Outcome of one named verification sweep."""

    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} cases)"
        if self.counterexample is not None:
            detail = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            line += f"  [{detail}]"
        return line


@dataclass
class Report:
    """An ordered collection of checks; passes when every check does."""

    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed_names(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def merge(self, other: "Report") -> "Report":
        return Report(self.checks + other.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


class Sweep:
    """Accumulator for one check: counts cases, keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failure: Optional[dict] = None

    def record(self, ok: bool, **context) -> None:
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = {k: str(v) for k, v in context.items()}

    def done(self) -> Check:
        return Check(self.name, self.failure is None, self.checked, self.failure)
