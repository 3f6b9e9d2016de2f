"""Verification reports shared by the checking routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import VerificationFailure


@dataclass
class Check:
    label: str
    kind: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind, "pass": self.passed, "witness": self.witness}


@dataclass
class Report:
    path: str
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def add(self, label, kind: str, passed: bool, witness: Any = None) -> Check:
        c = Check(str(label), kind, bool(passed), witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        self.warnings.extend(other.warnings)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed

    def require(self) -> "Report":
        """Raise VerificationFailure on the first failed check."""
        for c in self.checks:
            if not c.passed:
                raise VerificationFailure(
                    f"{c.kind} check failed for {c.label} on {self.path}",
                    label=c.label,
                    witness=c.witness,
                )
        return self

    def to_json(self) -> dict:
        out = {"path": self.path, "checks": [c.to_json() for c in self.checks]}
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out
