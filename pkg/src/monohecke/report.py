"""Pass/fail reports shared by the self-test suite and the GL_n(F_q) oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["Check", "Report"]


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        d = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    """
    >>> r = Report({"n": 2})
    >>> r.add("ok", True, "ignored")
    >>> r.add("bad", False, {"x": "s1"})
    >>> r.passed, r.to_json()["checks"][1]
    (False, {'name': 'bad', 'pass': False, 'witness': {'x': 's1'}})
    """

    params: dict
    checks: list[Check] = field(default_factory=list)
    notes: dict = field(default_factory=dict)  # informational, never fails

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(passed), None if passed else witness))

    def to_json(self) -> dict:
        out = {"params": self.params, "checks": [c.to_json() for c in self.checks],
               "pass": self.passed}
        if self.notes:
            out["notes"] = self.notes
        return out
