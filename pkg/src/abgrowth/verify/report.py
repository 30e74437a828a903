"""Scenario reports: comparisons, evidence tables and serialization."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field

PASS, FAIL, INAPPLICABLE, ERROR = "pass", "fail", "inapplicable", "error"


@dataclass
class Comparison:
    name: str
    measured: float
    expected: float
    tol: float
    op: str  # "approx" (|m - e| <= tol), "rel" (|m/e - 1| <= tol), "le" (m <= e + tol), "ge"
    holds: bool = False
    note: str = ""

    def __post_init__(self):
        self.holds = compare(self.measured, self.expected, self.tol, self.op)


def compare(measured, expected, tol, op):
    m, e = float(measured), float(expected)
    if not (math.isfinite(m) and math.isfinite(e)):
        return False
    if op == "approx":
        return abs(m - e) <= tol
    if op == "rel":
        return abs(m - e) <= tol * abs(e)
    if op == "le":
        return m <= e + tol
    if op == "ge":
        return m >= e - tol
    raise ValueError(f"unknown comparison {op!r}")


@dataclass
class Report:
    scenario_id: str
    kind: str
    verdict: str = PASS
    measured: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    comparisons: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    environment: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    message: str = ""
    metadata: dict = field(default_factory=dict)

    def check(self, name, measured, expected, tol, op="approx", note=""):
        c = Comparison(name, measured, expected, tol, op, note=note)
        self.comparisons.append(c)
        return c.holds

    def observe(self, name, **values):
        """Record a computed clause that is deliberately not part of the verdict."""
        self.observations.append({"name": name, **values})

    def table(self, name, columns, rows):
        self.evidence[name] = {"columns": list(columns), "rows": [list(r) for r in rows]}

    def finalize(self):
        if self.verdict in (PASS, FAIL):
            self.verdict = PASS if all(c.holds for c in self.comparisons) else FAIL
        return self

    @property
    def passed(self):
        return self.verdict == PASS

    def as_dict(self, with_metadata=True):
        d = {
            "scenario_id": self.scenario_id, "kind": self.kind, "verdict": self.verdict,
            "measured": self.measured, "expected": self.expected, "tolerances": self.tolerances,
            "comparisons": [c.__dict__ for c in self.comparisons],
            "observations": self.observations, "evidence": self.evidence,
            "environment": self.environment, "provenance": self.provenance,
            "message": self.message,
        }
        if with_metadata:
            d["metadata"] = self.metadata
        return _clean(d)

    def to_json(self, with_metadata=True):
        return json.dumps(self.as_dict(with_metadata), sort_keys=True, indent=1, allow_nan=False)

    def summary_line(self):
        bad = [c.name for c in self.comparisons if not c.holds]
        tail = f" ({', '.join(bad)})" if bad and self.verdict == FAIL else ""
        if self.message and self.verdict in (INAPPLICABLE, ERROR):
            tail = f" ({self.message})"
        return f"{self.verdict.upper():13s} {self.scenario_id} [{self.kind}]{tail}"


def _clean(x):
    """JSON-safe copy: non-finite floats become strings, tuples become lists."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if hasattr(x, "item") and not isinstance(x, (str, bytes)):  # numpy scalars
        x = x.item()
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    return x


def evidence_csv(report: Report, name):
    t = report.evidence[name]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(t["columns"])
    for row in _clean(t["rows"]):
        w.writerow(row)
    return buf.getvalue()


def write_atomic(path, text):
    """Write via a temporary file in the same directory, then rename."""
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_report(report: Report, out_dir):
    """Report JSON plus one CSV per evidence table; returns the JSON path."""
    base = os.path.join(out_dir, report.scenario_id)
    write_atomic(base + ".json", report.to_json() + "\n")
    for name in report.evidence:
        write_atomic(f"{base}.{name}.csv", evidence_csv(report, name))
    return base + ".json"
