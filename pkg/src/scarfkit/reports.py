"""Uniform check verdicts and the deterministic run report used by the CLI."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NA = "na"


def jsonable(value):
    """Convert tuples, frozensets and dataclass-like reports into JSON values."""
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted((jsonable(v) for v in value), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, float) and value == float("inf"):
        return "infinite"
    return value


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one executable statement: ``pass``, ``fail`` or ``na``."""

    check: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def holds(self):
        return self.status == PASS

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"check": self.check, "status": self.status, "details": jsonable(self.details)}

    @classmethod
    def of(cls, check, ok, **details):
        return cls(check, PASS if ok else FAIL, details)

    @classmethod
    def not_applicable(cls, check, reason):
        return cls(check, NA, {"reason": reason})


def digest(text):
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class RunReport:
    command: str
    input_digest: str = ""
    seed: int = None
    verdicts: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    timing: dict = None

    def add(self, report):
        self.verdicts.append(report)
        return report

    @property
    def failed(self):
        return any(v.status == FAIL for v in self.verdicts)

    def to_dict(self):
        out = {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": jsonable(self.results),
            "verdicts": [v.to_dict() for v in self.verdicts],
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data):
        verdicts = [CheckReport(v["check"], v["status"], v["details"]) for v in data["verdicts"]]
        return cls(
            data["command"], data["input_digest"], data.get("seed"), verdicts,
            data["results"], data.get("timing"),
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
