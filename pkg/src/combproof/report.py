"""Check reports: a verdict plus every violated condition with a witness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    """One violated condition and the vertices or values that violate it."""

    condition: str
    witness: Any = None
    detail: str = ""

    def __str__(self) -> str:
        text = self.condition
        if self.witness is not None:
            text += f" {self.witness!r}"
        if self.detail:
            text += f": {self.detail}"
        return text


@dataclass
class CheckReport:
    """Outcome of a checker; truthy exactly when no condition failed."""

    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, condition: str, witness: Any = None, detail: str = "") -> None:
        self.failures.append(Failure(condition, witness, detail))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for f in other.failures:
            self.failures.append(Failure(prefix + f.condition, f.witness, f.detail))

    def conditions(self) -> set[str]:
        return {f.condition for f in self.failures}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(f) for f in self.failures)
