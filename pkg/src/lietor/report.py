"""Check results and axiom reports shared by the verifier modules."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str | None = None
    window: int | None = None
    note: str | None = None

    @property
    def status(self) -> str:
        if not self.ok:
            return "fail"
        return "windowed-pass" if self.window is not None else "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.window is not None:
            out["window"] = self.window
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class AxiomReport:
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, window=None, note=None):
        self.checks.append(CheckResult(name, bool(ok), witness, window, note))
        return self.checks[-1]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}

    def lines(self):
        out = []
        for c in self.checks:
            line = f"{c.name}: {c.status}"
            if c.window is not None:
                line += f" (window {c.window})"
            if not c.ok and c.witness:
                line += f"  witness: {c.witness}"
            if c.note:
                line += f"  [{c.note}]"
            out.append(line)
        return out
