"""Small result records shared by the axiom checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    """Outcome of one verification; truthy iff it passed."""

    name: str
    ok: bool
    message: str = ""
    witness: dict[str, Any] | None = None

    def __bool__(self):
        return self.ok


@dataclass
class Report:
    """An ordered list of checks plus free-form facts (dimensions, ranks)."""

    title: str
    checks: list[CheckResult] = field(default_factory=list)
    facts: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def add(self, name: str, ok: bool, message: str = "", witness=None) -> CheckResult:
        res = CheckResult(name, bool(ok), message, witness)
        self.checks.append(res)
        return res

    def extend(self, other: "Report | CheckResult", prefix: str = ""):
        items = other.checks if isinstance(other, Report) else [other]
        for c in items:
            self.checks.append(CheckResult(prefix + c.name, c.ok, c.message, c.witness))
        if isinstance(other, Report):
            for k, v in other.facts.items():
                self.facts[prefix + k] = v

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.ok), None)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def first_nonzero(arr) -> tuple[int, ...] | None:
    """Index of the first nonzero entry, used to build witnesses."""
    import numpy as np

    idx = np.argwhere(np.asarray(arr) != 0)
    return tuple(int(i) for i in idx[0]) if len(idx) else None
