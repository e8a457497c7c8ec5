"""Pass/fail record shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Report"]


@dataclass
class Report:
    name: str
    ok: bool = True
    checks: list = field(default_factory=list)  # (label, ok, detail)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.checks.append((label, bool(ok), detail))
        if not ok:
            self.ok = False

    def merge(self, other: "Report"):
        for label, ok, detail in other.checks:
            self.add(f"{other.name}: {label}", ok, detail)
        return self

    def lines(self) -> list[str]:
        out = []
        for label, ok, detail in self.checks:
            line = f"{self.name}: {label}: {'ok' if ok else 'FAIL'}"
            out.append(line + (f" ({detail})" if detail else ""))
        return out
