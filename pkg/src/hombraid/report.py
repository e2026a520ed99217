"""Verification reports shared by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, name: str, passed: bool, witness: Any = None) -> "Report":
        self.checks.append(Check(name, passed, None if passed else witness))
        return self

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks]}

    def summary(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in self.checks]
        return "\n".join(lines)


class InvariantError(ValueError):
    """A structure failed the axioms a construction requires."""

    def __init__(self, message: str, report: Report | None = None):
        if report is not None and report.failures():
            first = report.failures()[0]
            message = f"{message}: {first.name} fails (witness {first.witness})"
        super().__init__(message)
        self.report = report
