"""Check results and their human/JSON renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence


@dataclass(frozen=True)
class Check:
    name: str
    inputs: tuple = ()
    passed: bool = True
    defect: Optional[str] = None
    note: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> "Report":
        self.checks.append(check)
        return self

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed


def defect_check(name: str, inputs: Sequence[str], value, note: str | None = None) -> Check:
    """A check that passes iff ``value`` is zero; the rendered value is kept on failure."""
    ok = not value
    return Check(name, tuple(inputs), ok, None if ok else str(value), note)


def to_dict(report: Report) -> dict:
    checks = []
    for c in report.checks:
        entry = {"name": c.name, "inputs": list(c.inputs), "verdict": c.verdict}
        if c.defect is not None:
            entry["defect"] = c.defect
        if c.note is not None:
            entry["note"] = c.note
        checks.append(entry)
    return {"suite": report.suite, "checks": checks, "verdict": report.verdict}


def emit(report: Report, fmt: str = "human") -> str:
    if fmt == "json":
        return json.dumps(to_dict(report), indent=2, ensure_ascii=False)
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for c in report.checks:
        head = f"[{c.verdict.upper()}] {report.suite}/{c.name}"
        if c.inputs:
            head += " (" + ", ".join(c.inputs) + ")"
        if c.note:
            head += f"  -- {c.note}"
        if c.defect is not None:
            head += f"  defect: {c.defect}"
        lines.append(head)
    lines.append(f"{report.suite}: {report.verdict.upper()}")
    return "\n".join(lines)
