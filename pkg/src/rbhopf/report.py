"""Verification reports shared by every checker.

A :class:`Report` is a list of :class:`AxiomCheck` entries, one per identity
tested.  An entry with no violations passed on every sampled tuple.  Checks
run on basis tuples only; every identity involved is multilinear in its
arguments, so that covers the span of the sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .algebra import LinComb, TensorLabel, format_rational


@dataclass
class Violation:
    labels: tuple
    lhs: Any = None
    rhs: Any = None


@dataclass
class AxiomCheck:
    axiom: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, labels, lhs, rhs) -> bool:
        """Count one evaluation; store a violation when ``lhs != rhs``."""
        self.checked += 1
        if lhs != rhs:
            self.violations.append(Violation(tuple(labels), lhs, rhs))
            return False
        return True


class Report:
    def __init__(self, checks=None, label_format: Callable | None = None):
        self.checks: list[AxiomCheck] = list(checks or [])
        self.label_format = label_format or repr

    def check(self, axiom: str) -> AxiomCheck:
        """Return the entry for ``axiom``, creating it on first use."""
        for c in self.checks:
            if c.axiom == axiom:
                return c
        c = AxiomCheck(axiom)
        self.checks.append(c)
        return c

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def violations(self) -> list:
        return [v for c in self.checks for v in c.violations]

    def failed(self) -> list[str]:
        return [c.axiom for c in self.checks if not c.ok]

    def __len__(self):
        return len(self.violations)

    def __repr__(self):
        status = "ok" if self.ok else f"{len(self)} violations in {self.failed()}"
        return f"<Report {len(self.checks)} checks: {status}>"

    # serialization

    def _label(self, label):
        if isinstance(label, TensorLabel):
            return "⊗".join(self._label(p) for p in label)
        return self.label_format(label)

    def _value(self, v):
        if isinstance(v, LinComb):
            return {self._label(k): format_rational(c) for k, c in v.items()}
        if isinstance(v, Fraction):
            return format_rational(v)
        if isinstance(v, int):
            return format_rational(Fraction(v))
        return v

    def to_json(self, max_violations: int | None = 20) -> list[dict]:
        out = []
        for c in self.checks:
            vs = c.violations if max_violations is None else c.violations[:max_violations]
            out.append({
                "axiom": c.axiom,
                "checked": c.checked,
                "ok": c.ok,
                "violation_count": len(c.violations),
                "violations": [
                    {"labels": [self._label(l) for l in v.labels],
                     "lhs": self._value(v.lhs),
                     "rhs": self._value(v.rhs)}
                    for v in vs
                ],
            })
        return out

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            lines.append(f"{mark}  {c.axiom}  ({c.checked} checked, {len(c.violations)} violations)")
            for v in c.violations[:5]:
                labels = ", ".join(self._label(l) for l in v.labels)
                lines.append(f"      at ({labels}): {self._value(v.lhs)} != {self._value(v.rhs)}")
        return "\n".join(lines)
