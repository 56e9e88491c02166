"""Check reports shared by the certificate builders and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactmath import MPoly, format_rational


@dataclass
class Check:
    name: str
    defect: Fraction
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.defect == 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "defect": format_rational(self.defect),
            "detail": self.detail,
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    hamiltonians: list[MPoly] = field(default_factory=list)
    witness_points: list[list[Fraction]] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, defect, detail: str = "") -> Check:
        c = Check(name, Fraction(defect), detail)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        doc = {
            "checks": [c.to_json() for c in self.checks],
            "hamiltonians": [h.to_json() for h in self.hamiltonians],
            "witness_points": [[format_rational(x) for x in p] for p in self.witness_points],
        }
        doc.update(self.extra)
        return doc


def render_text(doc: dict) -> str:
    """Human-readable rendering of a report document."""
    lines = []
    for c in doc.get("checks", []):
        line = f"{c['status'].upper():4}  {c['name']}  defect={c['defect']}"
        if c.get("detail"):
            line += f"  ({c['detail']})"
        lines.append(line)
    for n, h in enumerate(doc.get("hamiltonians", []), start=1):
        nv = len(h[0]["exps"]) if h else 0
        p = MPoly.from_json(h, nvars=nv) if h else None
        lines.append(f"H{n} = {p if p is not None else 0}")
    for p in doc.get("witness_points", []):
        lines.append("witness = (" + ", ".join(p) + ")")
    for key, value in doc.items():
        if key in ("checks", "hamiltonians", "witness_points"):
            continue
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
