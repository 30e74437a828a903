"""Scenario suite files: loading, running and writing reports."""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .report import INAPPLICABLE, PASS, write_atomic, write_report
from .scenarios import ConfigError, outcome_ok, run_scenario, scenario_from_dict

SCHEMA = "abgrowth-suite/1"
_TOP_KEYS = {"schema", "seed", "defaults", "scenarios", "description"}


@dataclass
class Suite:
    scenarios: list
    seed: int = 0
    description: str = ""
    source: str = ""


@dataclass
class SuiteResult:
    suite: Suite
    reports: list = field(default_factory=list)

    @property
    def ok(self):
        return all(outcome_ok(s, r) for s, r in zip(self.suite.scenarios, self.reports))

    def summary(self):
        lines = []
        for s, r in zip(self.suite.scenarios, self.reports):
            mark = "ok " if outcome_ok(s, r) else "BAD"
            lines.append(f"{mark} {r.summary_line()}")
        counts = {}
        for r in self.reports:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        tally = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        lines.append(f"{len(self.reports)} scenarios: {tally or 'none'}")
        return "\n".join(lines)


def suite_from_dict(doc, source=""):
    if not isinstance(doc, dict):
        raise ConfigError("suite document must be a JSON object")
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        raise ConfigError(f"unknown suite keys {unknown}")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise ConfigError(f"unsupported suite schema {doc.get('schema')!r}")
    seed = doc.get("seed", 0)
    if not isinstance(seed, int):
        raise ConfigError("seed must be an integer")
    defaults = doc.get("defaults", {})
    items = doc.get("scenarios", [])
    if not isinstance(items, list):
        raise ConfigError("scenarios must be a list")
    scenarios = []
    seen = set()
    for item in items:
        s = scenario_from_dict(item, defaults)
        if s.id in seen:
            raise ConfigError(f"duplicate scenario id {s.id!r}")
        seen.add(s.id)
        if s.kind == "zero_bound_property" and "seed" not in s.params:
            s.params["seed"] = seed
        scenarios.append(s)
    return Suite(scenarios, seed, doc.get("description", ""), source)


def load_suite(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from exc
    return suite_from_dict(doc, str(path))


def default_suite_path():
    return str(resources.files("abgrowth") / "data" / "default_suite.json")


def load_default_suite():
    return load_suite(default_suite_path())


def apply_overrides(suite: Suite, *, fan=None, tol=None, threads=None, seed=None):
    """Command-line overrides for ODE scenarios and randomized properties."""
    for s in suite.scenarios:
        if "ode" in s.params and s.kind != "reduction_check":
            if fan is not None:
                s.params["fan"] = fan
            if tol is not None:
                s.params["tol"] = tol
            if threads is not None:
                s.params["threads"] = threads
        if seed is not None and s.kind == "zero_bound_property":
            s.params["seed"] = seed
    return suite


def run_suite(suite: Suite, out_dir=None, *, jobs=1, progress=None) -> SuiteResult:
    """Run every scenario (optionally in parallel) and write reports."""
    def one(s):
        rep = run_scenario(s)
        rep.environment["seed"] = suite.seed
        if progress:
            progress(rep)
        return rep

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            reports = list(pool.map(one, suite.scenarios))
    else:
        reports = [one(s) for s in suite.scenarios]
    result = SuiteResult(suite, reports)
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        for r in reports:
            write_report(r, out_dir)
        write_atomic(os.path.join(out_dir, "summary.txt"), result.summary() + "\n")
    return result


__all__ = ["SCHEMA", "Suite", "SuiteResult", "suite_from_dict", "load_suite", "load_default_suite",
           "default_suite_path", "apply_overrides", "run_suite", "PASS", "INAPPLICABLE"]
