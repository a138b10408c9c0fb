from __future__ import annotations

from dataclasses import asdict, dataclass, field

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
NOT_APPLICABLE = "not-applicable"


@dataclass
class TheoremReport:
    """Outcome of checking one theorem on concrete data.

    ``inconsistent`` means every hypothesis held and a conclusion failed,
    which points at a bug in this package, not at the theorem.
    """

    theorem: str
    hypotheses: list = field(default_factory=list)   # (name, checked_on, holds)
    conclusions: list = field(default_factory=list)  # (name, holds)
    notes: list = field(default_factory=list)

    def hypothesis(self, name, holds, checked_on=""):
        self.hypotheses.append((name, checked_on, bool(holds)))
        return bool(holds)

    def conclusion(self, name, holds):
        self.conclusions.append((name, bool(holds)))
        return bool(holds)

    @property
    def verdict(self) -> str:
        if not all(h for _, _, h in self.hypotheses):
            return NOT_APPLICABLE
        if all(c for _, c in self.conclusions):
            return CONSISTENT
        return INCONSISTENT

    def to_dict(self) -> dict:
        d = asdict(self)
        d["hypotheses"] = [list(h) for h in self.hypotheses]
        d["conclusions"] = [list(c) for c in self.conclusions]
        d["verdict"] = self.verdict
        return d

    def __str__(self):
        lines = [f"{self.theorem}: {self.verdict}"]
        for name, where, holds in self.hypotheses:
            lines.append(f"  hypothesis {'ok  ' if holds else 'FAIL'} {name}" + (f" [{where}]" if where else ""))
        for name, holds in self.conclusions:
            lines.append(f"  conclusion {'ok  ' if holds else 'FAIL'} {name}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)
