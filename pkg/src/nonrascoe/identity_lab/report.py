"""Verification reports: one JSON object per line, plus a flat CSV summary."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

SCHEMA_VERSION = 1

MODES = ("series", "rational-point-evaluation", "modular-scan")
STATUSES = ("pass", "fail")
CSV_COLUMNS = ("id", "params", "mode", "status", "checked", "witness", "ms")


@dataclass
class IdentityReport:
    """Outcome of one check.

    `checked` records exactly what was compared (an order, a point list, a
    scan range); a failing report always carries a `witness`.
    """

    id: str
    params: dict
    mode: str
    status: str
    checked: dict
    witness: dict | None = None
    ms: float | None = None
    details: dict = field(default_factory=dict)
    schema: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = True) -> dict:
        d = asdict(self)
        if not timings:
            d["ms"] = None
        return d

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> IdentityReport:
        d = json.loads(text)
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(**d)

    def csv_row(self, timings: bool = True) -> list[str]:
        def flat(v):
            return "" if v is None else json.dumps(v, sort_keys=True, separators=(",", ":"))

        ms = "" if self.ms is None or not timings else f"{self.ms:.1f}"
        return [self.id, flat(self.params), self.mode, self.status, flat(self.checked), flat(self.witness), ms]


def reports_to_jsonl(reports: Iterable[IdentityReport], timings: bool = True) -> str:
    return "".join(r.to_json(timings) + "\n" for r in reports)


def reports_from_jsonl(text: str) -> list[IdentityReport]:
    return [IdentityReport.from_json(line) for line in text.splitlines() if line.strip()]


def reports_to_csv(reports: Iterable[IdentityReport], timings: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row(timings))
    return buf.getvalue()


def json_safe(value):
    """Exact values as strings, containers recursively."""
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    return str(value)
