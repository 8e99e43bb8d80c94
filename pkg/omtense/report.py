from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ONE_SIDED = "one-sided"


@dataclass(frozen=True)
class Witness:
    law: str
    assignment: tuple[tuple[str, str], ...]  # (variable, rendered value) in variable order
    point: str | None
    left: str
    right: str
    replay: Callable[[], tuple[str, ...]] | None = field(default=None, compare=False, repr=False)

    def describe(self) -> str:
        assignment = ", ".join(f"{n} = {v}" for n, v in self.assignment)
        location = f" at t={self.point}" if self.point is not None else ""
        return f"{assignment}{location}: {self.law} fails with {self.left} vs {self.right}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "assignment": dict(self.assignment),
            "point": self.point,
            "left": self.left,
            "right": self.right,
        }


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    instance: str
    verdict: Verdict
    witness: Witness | None = None
    samples: int | None = None
    reason: str | None = None
    notes: tuple[tuple[str, str], ...] = ()
    details: tuple["VerifyReport", ...] = ()

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL

    @property
    def holds(self) -> bool:
        return self.verdict in (Verdict.PASS, Verdict.ONE_SIDED)

    def note(self, key: str) -> str | None:
        return dict(self.notes).get(key)

    def status(self) -> str:
        if self.verdict is Verdict.ONE_SIDED:
            return f"one-sided ({self.samples} samples, no counterexample)"

        if self.verdict is Verdict.SKIPPED:
            return f"skipped ({self.reason})"

        return self.verdict.value

    def lines(self, depth: int = 0) -> list[str]:
        indent = "  " * depth
        title = self.suite if depth > 0 else f"{self.suite} [{self.instance}]"
        lines = [f"{indent}{title}: {self.status()}"]

        for key, value in self.notes:
            lines.append(f"{indent}  {key}: {value}")

        if self.witness is not None:
            lines.append(f"{indent}  witness: {self.witness.describe()}")

        for detail in self.details:
            lines.extend(detail.lines(depth + 1))

        return lines

    def to_text(self) -> str:
        return "\n".join(self.lines())

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "verdict": self.verdict.value,
            "samples": self.samples,
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "notes": dict(self.notes),
            "details": [d.to_dict() for d in self.details],
        }


@dataclass(frozen=True)
class Trace:
    lines: tuple[str, ...]

    def __str__(self) -> str:
        return "\n".join(self.lines)


def combine(
    suite: str,
    instance: str,
    details: Iterable[VerifyReport],
    notes: tuple[tuple[str, str], ...] = (),
) -> VerifyReport:
    """Folds sub-reports into one: any failure fails, any sampled pass is one-sided, all skipped is skipped."""
    details = tuple(details)
    verdicts = {d.verdict for d in details}

    if Verdict.FAIL in verdicts:
        verdict = Verdict.FAIL
    elif Verdict.ONE_SIDED in verdicts:
        verdict = Verdict.ONE_SIDED
    elif details and verdicts == {Verdict.SKIPPED}:
        verdict = Verdict.SKIPPED
    else:
        verdict = Verdict.PASS

    samples = max((d.samples for d in details if d.samples is not None), default=None) if verdict is Verdict.ONE_SIDED else None
    reason = "; ".join(sorted({d.reason for d in details if d.reason})) if verdict is Verdict.SKIPPED else None

    return VerifyReport(suite, instance, verdict, samples=samples, reason=reason, notes=notes, details=details)


def skipped(suite: str, instance: str, reason: str) -> VerifyReport:
    return VerifyReport(suite, instance, Verdict.SKIPPED, reason=reason)
