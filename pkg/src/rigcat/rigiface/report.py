"""Verdicts of coherence checks, with replayable counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Witness:
    objects: tuple
    args: tuple[str, ...]
    lhs: str
    rhs: str
    replay: Optional[Callable[[], bool]] = field(default=None, repr=False, compare=False)

    def refails(self) -> bool:
        """Re-evaluate the failing instance; True when it still fails."""
        if self.replay is None:
            raise RuntimeError("witness carries no replay closure")
        return self.replay()

    def to_dict(self) -> dict:
        return {
            "objects": list(self.objects),
            "args": list(self.args),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class AxiomReport:
    axiom: str
    instance: str
    bound: int
    instances: int = 0
    verdict: str = PASS
    vacuous: bool = False
    witness: Optional[Witness] = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "axiom": self.axiom,
            "instance": self.instance,
            "bound": self.bound,
            "instances": self.instances,
            "verdict": self.verdict,
            "vacuous": self.vacuous,
            "objects": list(self.witness.objects) if self.witness else None,
            "witness": [self.witness.lhs, self.witness.rhs] if self.witness else None,
            "args": list(self.witness.args) if self.witness else None,
            "note": self.note,
        }

    def line(self) -> str:
        tag = self.verdict.upper()
        extra = " (vacuous)" if self.vacuous else ""
        s = f"{tag:4} {self.axiom:<14} {self.instance:<22} n={self.instances}{extra}"
        if self.note:
            s += f"  {self.note}"
        if self.witness:
            w = self.witness
            s += f"\n     at {w.objects}"
            if w.args:
                s += f" with {', '.join(w.args)}"
            s += f"\n     lhs {w.lhs}\n     rhs {w.rhs}"
        return s
