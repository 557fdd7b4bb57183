"""Verdict reporting shared by every axiom checker.

A check report is an ordered list of per-axiom verdicts.  Failed equation
verdicts carry a witness: the first basis multi-index where the two sides
differ, together with both scalar values.  Checkers enumerate all axioms even
after the first failure so a report always gives the full diagnostic picture.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """First differing coefficient of a failed equation."""

    index: tuple
    left: str
    right: str

    def to_json(self):
        return {"index": list(self.index), "left": self.left, "right": self.right}


@dataclass(frozen=True)
class Verdict:
    axiom: str
    passed: bool
    witness: Witness | None = None
    note: str | None = None

    def to_json(self):
        out = {"axiom": self.axiom, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.note is not None:
            out["note"] = self.note
        return out

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        text = f"{status}  {self.axiom}"
        if self.note:
            text += f"  [{self.note}]"
        if self.witness is not None:
            idx = "⊗".join(str(part) for part in self.witness.index)
            text += f"  at {idx}: {self.witness.left} ≠ {self.witness.right}"
        return text


@dataclass
class CheckReport:
    subject: str
    verdicts: list = field(default_factory=list)

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    def failures(self):
        return [v for v in self.verdicts if not v.passed]

    def add(self, verdict, on_verdict=None):
        self.verdicts.append(verdict)
        if on_verdict is not None:
            on_verdict(verdict)
        return verdict

    def extend_prefixed(self, prefix, other, on_verdict=None):
        """Fold another report in, prefixing its axiom names."""
        for v in other.verdicts:
            self.add(
                Verdict(f"{prefix}:{v.axiom}", v.passed, v.witness, v.note),
                on_verdict,
            )

    def to_json(self):
        return {
            "subject": self.subject,
            "pass": self.passed,
            "axioms": [v.to_json() for v in self.verdicts],
        }

    def __str__(self):
        lines = [f"check report for {self.subject}:"]
        lines.extend(f"  {v}" for v in self.verdicts)
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


class CertificationError(Exception):
    """A constructed object failed its own axiom check; carries the report."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(v.axiom for v in report.failures())
        super().__init__(f"{report.subject}: failed axioms: {failed}")


class UncertifiedInputError(Exception):
    """An operation required a certified input but got an unchecked one."""
