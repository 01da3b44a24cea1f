"""Verification reports and their canonical JSON form.

Canonical form: UTF-8 JSON with sorted keys, two-space indent, every number
written as a decimal string (rationals as ``"num/den"``). Booleans and null
stay JSON literals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .cache import FORMAT_VERSION

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
SKIPPED = "skipped"

EXIT_CODES = {PASS: 0, FAIL: 2, INCONCLUSIVE: 3, SKIPPED: 4}
_SEVERITY = {PASS: 0, SKIPPED: 1, INCONCLUSIVE: 2, FAIL: 3}

VERSIONS = {"tool": __version__, "cache_format": str(FORMAT_VERSION)}


def worst(statuses) -> str:
    return max(statuses, key=_SEVERITY.__getitem__, default=PASS)


def canonical(obj):
    """JSON-ready copy of ``obj`` with numbers as decimal strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    raise TypeError(f"cannot serialise {type(obj).__name__} exactly")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass
class CheckReport:
    check_id: str
    anchor: str
    params: dict
    status: str
    seed: int
    reason: str | None = None
    witness: object = None
    details: dict = field(default_factory=dict)
    runtime_ms: int | None = None
    versions: dict = field(default_factory=lambda: dict(VERSIONS))

    def __post_init__(self):
        if self.status not in EXIT_CODES:
            raise ValueError(f"unknown status {self.status!r}")
        self.params = canonical(self.params)
        self.witness = canonical(self.witness)
        self.details = canonical(self.details)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        out = {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "params": self.params,
            "status": self.status,
            "reason": self.reason,
            "witness": self.witness,
            "details": self.details,
            "seed": str(self.seed),
            "versions": self.versions,
        }
        if self.runtime_ms is not None:
            out["runtime_ms"] = str(self.runtime_ms)
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            check_id=d["check_id"], anchor=d["anchor"], params=d["params"], status=d["status"],
            seed=int(d["seed"]), reason=d.get("reason"), witness=d.get("witness"),
            details=d.get("details", {}),
            runtime_ms=int(d["runtime_ms"]) if "runtime_ms" in d else None,
            versions=d.get("versions", dict(VERSIONS)))

    @classmethod
    def from_json(cls, text: str) -> "CheckReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        line = f"{self.check_id}: {self.status}"
        return f"{line} ({self.reason})" if self.reason else line


@dataclass
class SuiteReport:
    profile: str
    seed: int
    reports: list[CheckReport]

    @property
    def status(self) -> str:
        return worst(r.status for r in self.reports)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        return {
            "profile": self.profile,
            "seed": str(self.seed),
            "status": self.status,
            "counts": {s: str(sum(r.status == s for r in self.reports)) for s in EXIT_CODES},
            "reports": [r.to_dict() for r in self.reports],
            "versions": dict(VERSIONS),
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())
