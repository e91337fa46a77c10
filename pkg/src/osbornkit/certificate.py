"""Machine-readable check results.

JSON shape: ``{check, loop, params, pass, clauses: [{name, pass, witness, gating}], data}``.
Only gating clauses decide ``pass``; non-gating clauses are recorded findings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Clause:
    name: str
    passed: bool
    witness: Any = None
    gating: bool = True

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": bool(self.passed),
                "witness": _plain(self.witness), "gating": self.gating}


@dataclass
class Certificate:
    check: str
    loop: str
    params: Any = None
    clauses: list[Clause] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness=None, gating: bool = True) -> bool:
        self.clauses.append(Clause(name, bool(passed), None if passed else witness, gating))
        return bool(passed)

    def note(self, name: str, passed: bool, witness=None) -> bool:
        """Record a non-gating finding."""
        return self.add(name, passed, witness, gating=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses if c.gating)

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.gating and not c.passed]

    def to_dict(self) -> dict:
        return {"check": self.check, "loop": self.loop, "params": _plain(self.params),
                "pass": self.passed, "clauses": [c.to_dict() for c in self.clauses],
                "data": _plain(self.data)}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        cert = cls(d["check"], d["loop"], d.get("params"), data=d.get("data", {}))
        for c in d["clauses"]:
            cert.clauses.append(Clause(c["name"], c["pass"], c.get("witness"), c.get("gating", True)))
        return cert

    def summary(self) -> str:
        lines = [f"{self.check} on {self.loop}"
                 + (f" p={_plain(self.params)}" if self.params is not None else "")
                 + f": {'PASS' if self.passed else 'FAIL'}"]
        for c in self.clauses:
            tag = "ok  " if c.passed else ("FAIL" if c.gating else "note")
            wit = f"  witness={_plain(c.witness)}" if c.witness is not None else ""
            lines.append(f"  [{tag}] {c.name}{wit}")
        return "\n".join(lines)


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "image"):
        return list(obj.image)
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def merge(check: str, loop: str, per_p: list[tuple[Any, Certificate]]) -> Certificate:
    """Fold per-parameter certificates into one, keeping the first failing p per clause."""
    out = Certificate(check, loop, params="all")
    order: list[str] = []
    seen: dict[str, Clause] = {}
    for p, cert in per_p:
        for c in cert.clauses:
            if c.name not in seen:
                seen[c.name] = Clause(c.name, True, None, c.gating)
                order.append(c.name)
            agg = seen[c.name]
            if not c.passed and agg.passed:
                agg.passed = False
                agg.witness = {"p": _plain(p), "witness": _plain(c.witness)}
    out.clauses = [seen[name] for name in order]
    out.data["count"] = len(per_p)
    out.data["failing_params"] = sum(1 for _, c in per_p if not c.passed)
    return out
