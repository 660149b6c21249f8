"""Verification results. Failures are data: every checker returns a CaseReport."""

from __future__ import annotations

from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    where: tuple | None = None  # 1-based coordinates of the first failing entry

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.where is not None:
            out["where"] = list(self.where)
        return out


@dataclass
class PaperNote:
    """A documented discrepancy in the source material, surfaced rather than fixed."""

    code: str
    message: str

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message}


@dataclass
class CaseReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    notes: list[PaperNote] = field(default_factory=list)
    skipped: str = ""
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, ok: bool, detail: str = "", where=None) -> bool:
        self.checks.append(Check(name, bool(ok), detail, where))
        return bool(ok)

    def note(self, code: str, message: str) -> None:
        self.notes.append(PaperNote(code, message))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def detail(self) -> str:
        if self.skipped:
            return f"skipped: {self.skipped}"
        bad = self.failures()
        if not bad:
            return f"{len(self.checks)} checks passed"
        return "; ".join(f"{c.name} failed" + (f" ({c.detail})" if c.detail else "") for c in bad)

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, **self.params}
        out["pass"] = self.passed
        out["detail"] = self.detail()
        if self.skipped:
            out["skipped"] = True
        out["checks"] = [c.to_json() for c in self.checks]
        if self.notes:
            out["paper_notes"] = [n.to_json() for n in self.notes]
        if timing and self.seconds is not None:
            out["wall_time"] = round(self.seconds, 6)
        return out


@dataclass
class RunReport:
    suite: str
    cases: list[CaseReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json(self, timing: bool = True) -> dict:
        n_pass = sum(c.passed for c in self.cases)
        notes = sorted({(nt.code, nt.message) for c in self.cases for nt in c.notes})
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "cases": [c.to_json(timing) for c in self.cases],
            "paper_notes": [{"code": k, "message": v} for k, v in notes],
            "summary": {
                "total": len(self.cases),
                "passed": n_pass,
                "failed": len(self.cases) - n_pass,
            },
        }
