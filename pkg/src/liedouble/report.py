"""Structured pass/fail verdicts for axiom suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """One failed identity: a label plus the offending residual."""
    identity: str
    residual: str


@dataclass
class CheckReport:
    """Verdict of an axiom suite: passed iff there are no witnesses."""

    check: str
    witnesses: list = field(default_factory=list)
    seed: int = 0
    elapsed_ms: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def add(self, identity: str, residual) -> None:
        self.witnesses.append(Witness(identity, str(residual)))

    def require(self, identity: str, residual) -> None:
        """Record a witness unless the residual is (the) zero (polynomial)."""
        iszero = getattr(residual, "is_zero", None)
        if iszero is None:
            iszero = residual == 0
        if not iszero:
            self.add(identity, residual)

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for w in other.witnesses:
            self.witnesses.append(Witness(prefix + w.identity, w.residual))

    def to_json(self) -> str:
        # field order is part of the output contract
        doc = {
            "check": self.check,
            "passed": self.passed,
            "witnesses": [{"identity": w.identity, "residual": w.residual}
                          for w in self.witnesses],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(doc, separators=(", ", ": "))

    def to_text(self) -> str:
        if self.passed:
            return "PASS %s (0 witnesses)" % self.check
        lines = ["FAIL %s (%d witnesses)" % (self.check, len(self.witnesses))]
        for w in self.witnesses:
            lines.append("  %s: %s" % (w.identity, w.residual))
        return "\n".join(lines)
