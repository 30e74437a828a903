"""Acceptance criteria, each run at its stated tolerance and time limit.

Every criterion runs the corresponding scenario of the bundled suite and then
checks the measured values against the criterion's own numbers, which are
sometimes looser than the suite's tolerances.  A pass/fail line per criterion
is printed in the terminal summary.
"""
import json
import math
import os
import time

import numpy as np
import pytest

from abgrowth.functions import entire, proximity_m, wiman_valiron_deviation
from abgrowth.odes import integrate_ray, polynomial_zero_bound
from abgrowth.verify import PASS, load_default_suite, run_scenario, run_suite
from abgrowth.verify.scenarios import clear_caches


def scenario(sid):
    return next(s for s in load_default_suite().scenarios if s.id == sid)


class Criterion:
    """Times a block, enforces the limit and records a one-line outcome."""

    def __init__(self, log, number, title, limit_s):
        self.log, self.number, self.title, self.limit = log, number, title, limit_s
        self.detail = ""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        ok = exc_type is None and elapsed < self.limit
        why = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}".splitlines()[0]
        self.log.append(f"criterion {self.number}: {'PASS' if ok else 'FAIL'}  {self.title}  "
                        f"[{elapsed:.1f} s, limit {self.limit:g} s]  {why}")
        if exc_type is None and not ok:
            raise AssertionError(f"criterion {self.number} took {elapsed:.1f} s "
                                 f"(limit {self.limit:g} s)")
        return False


def test_criterion_01_order_of_exponential(acceptance_log):
    with Criterion(acceptance_log, 1, "order of e^z, T-based, and T(10, e^z)", 5) as c:
        rep = run_scenario(scenario("order_exp_T"))
        slope = rep.measured["order T_based slope"]
        T10 = proximity_m(entire("exp(z)"), 10.0)
        assert rep.verdict == PASS
        assert abs(slope - 1.0) <= 0.02
        assert abs(T10 - 10 / math.pi) <= 1e-5
        c.detail = f"slope {slope:.6f}, T(10) {T10:.8f}"


def test_criterion_02_iterated_scale_order(acceptance_log):
    with Criterion(acceptance_log, 2, "order of exp(e^z) with alpha = log, M-based", 5) as c:
        s = scenario("order_expexp_M")
        rep = run_scenario(s)
        slope = rep.measured["order M_based slope"]
        radii = [row[0] for row in rep.evidence["estimate0"]["rows"]]
        assert rep.verdict == PASS
        assert radii[0] == pytest.approx(4.0) and radii[-1] == pytest.approx(60.0)
        assert abs(slope - 1.0) <= 0.05
        c.detail = f"slope {slope:.4f} on r in [4, 60]"


@pytest.mark.slow
def test_criterion_03_dominant_coefficient(acceptance_log):
    clear_caches()
    with Criterion(acceptance_log, 3, "f'' + e^z f = 0: shifted order of every basis handle",
                   60) as c:
        rep = run_scenario(scenario("theorem3_exp"))
        orders = rep.measured["handle_shifted_orders"]
        assert rep.verdict == PASS
        assert len(orders) == 2
        assert all(0.85 <= o <= 1.15 for o in orders)
        assert rep.environment["excluded_angles"]
        c.detail = "shifted orders " + ", ".join(f"{o:.4f}" for o in orders)


@pytest.mark.slow
def test_criterion_04_type_dominance(acceptance_log):
    with Criterion(acceptance_log, 4, "f'' + e^z f' + e^{2z} f = 0: shifted orders", 120) as c:
        rep = run_scenario(scenario("theorem4_exp"))
        tau0 = rep.measured["tau_M_A0"]
        tau1 = rep.measured["tau_M_rivals"][0][1]
        orders = rep.measured["handle_shifted_orders"]
        assert rep.verdict == PASS
        assert tau0 == pytest.approx(2.0, rel=0.1) and tau1 == pytest.approx(1.0, rel=0.1)
        assert tau0 > tau1
        assert all(0.8 <= o <= 1.2 for o in orders)
        c.detail = (f"tau_M[A0] {tau0:.4f} > tau_M[A1] {tau1:.4f}; shifted orders "
                    + ", ".join(f"{o:.4f}" for o in orders))


@pytest.mark.slow
def test_criterion_05_count_below_lambda(acceptance_log):
    # reuses the basis traced for criterion 3 when run in the same session
    with Criterion(acceptance_log, 5, "f'' + e^z f = 0, lambda = 1: handles below 0.85", 60) as c:
        rep = run_scenario(scenario("theorem2_exp"))
        orders = rep.measured["handle_shifted_orders"]
        below = sum(o < 0.85 for o in orders)
        assert rep.verdict == PASS
        assert below == 0 and rep.measured["count_below"] == 0
        c.detail = f"{below} of {len(orders)} handles below 0.85 (m = {rep.measured['m']})"


def test_criterion_06_first_order_equation(acceptance_log):
    with Criterion(acceptance_log, 6, "f' - e^z f = 0: closed form and sup orders", 10) as c:
        rep = run_scenario(scenario("theorem1_k1"))
        tr = integrate_ray("-exp(z)", [1.0], 0.0, 5.0, tol=1e-10)
        want = np.exp(tr.radii) - 1
        rel = float(np.max(np.abs(tr.log_abs[:, 0] - want) / want))
        sup_f = rep.measured["sup_shifted_order"]
        sup_a = rep.measured["sup_coefficient_order"]
        assert rep.verdict == PASS
        assert rel <= 1e-6
        assert abs(sup_f - 1.0) <= 0.1 and abs(sup_f - sup_a) <= 0.1
        c.detail = f"max rel err {rel:.2e}; sup shifted order {sup_f:.4f} vs {sup_a:.4f}"


def test_criterion_07_airy_order(acceptance_log):
    with Criterion(acceptance_log, 7, "f'' - z f = 0: plain order on r in [10, 100]", 30) as c:
        rep = run_scenario(scenario("airy_order"))
        orders = rep.measured["handle_orders"]
        series = rep.measured["series_max_rel_err"]
        assert rep.verdict == PASS
        assert all(abs(o - 1.5) <= 0.1 for o in orders)
        assert rep.measured["series_points"] > 0 and series <= 1e-6
        c.detail = ("orders " + ", ".join(f"{o:.4f}" for o in orders)
                    + f"; power-series gap {series:.2e}")


def test_criterion_08_wronskian(acceptance_log):
    with Criterion(acceptance_log, 8, "f'' - 3f' + 2f = 0: Wronskian reconstruction", 5) as c:
        rep = run_scenario(scenario("wronskian_const"))
        assert rep.verdict == PASS
        assert rep.measured["points"] == 100
        assert rep.measured["W_z0"] == [1 + 0j, 0.0]
        assert rep.measured["reconstruction_max_rel_err"] <= 1e-6
        assert rep.measured["abel_max_rel_gap"] <= 1e-6
        c.detail = (f"W(0) = 1; reconstruction {rep.measured['reconstruction_max_rel_err']:.1e}; "
                    f"Abel {rep.measured['abel_max_rel_gap']:.1e}")


def test_criterion_09_order_reduction(acceptance_log):
    with Criterion(acceptance_log, 9, "reduction of f'' - 3f' + 2f = 0 by e^z and e^{2z}", 5) as c:
        a = run_scenario(scenario("reduction_exp"))
        b = run_scenario(scenario("reduction_exp2"))
        assert a.verdict == PASS and b.verdict == PASS
        for rep in (a, b):
            assert rep.measured["reduced_coefficient_max_err"] <= 1e-9
            assert rep.measured["residual"] <= 1e-9
        assert a.measured["negative_control_residual"] >= 0.1
        c.detail = (f"residuals {a.measured['residual']:.1e}, {b.measured['residual']:.1e}; "
                    f"negative control {a.measured['negative_control_residual']:.2f}")


def test_criterion_10_zero_bound(acceptance_log):
    with Criterion(acceptance_log, 10, "200 seeded polynomials: roots within the bound", 5) as c:
        suite = load_default_suite()
        s = next(x for x in suite.scenarios if x.id == "zero_bound")
        rep = run_scenario(s)
        assert rep.verdict == PASS and rep.measured["fraction_inside"] == 1.0
        assert len(rep.evidence["polynomials"]["rows"]) == 200
        assert max(row[1] for row in rep.evidence["polynomials"]["rows"]) <= 8
        # independent oracle: companion-matrix roots from numpy on the same family
        rng = np.random.default_rng(suite.seed)
        for _ in range(200):
            a = rng.uniform(-10, 10, int(rng.integers(1, 9)) + 1)
            assert np.all(np.abs(np.roots(a[::-1])) <= polynomial_zero_bound(a) + 1e-9)
        c.detail = "200 of 200 inside (and the numpy cross-check)"


def test_criterion_11_interval_measure(acceptance_log):
    with Criterion(acceptance_log, 11, "logarithmic measure of the interval family", 1) as c:
        rep = run_scenario(scenario("interval_measure"))
        rows = rep.evidence["partial_sums"]["rows"]
        assert rep.verdict == PASS
        assert [r[0] for r in rows] == [10, 1000, 1000000]
        for n, meas, _ in rows:
            assert abs(meas - math.log((n + 1) / 2)) <= 1e-12
        assert rows[0][1] == pytest.approx(1.70475, abs=5e-6)
        c.detail = f"N=10: {rows[0][1]:.10f}"


def test_criterion_12_order_and_type_algebra(acceptance_log):
    with Criterion(acceptance_log, 12, "orders and types of sums, products, multiples", 20) as c:
        o = run_scenario(scenario("order_algebra"))
        t = run_scenario(scenario("type_algebra"))
        assert o.verdict == PASS and t.verdict == PASS
        s_sum = o.measured["sigma_sum"]
        gap = abs(o.measured["sigma_scaled_f1"] - o.measured["sigma_f1"])
        tm, tt = t.measured["tau_M_sum"], t.measured["tau_T_sum"]
        assert abs(s_sum - 2.0) <= 0.05
        assert gap <= 0.02
        assert abs(tm / 2.0 - 1) <= 0.10
        assert abs(tt / (2 / math.pi) - 1) <= 0.10
        c.detail = (f"sigma[e^z+e^(z^2)] {s_sum:.4f}; scalar gap {gap:.1e}; "
                    f"tau_M {tm:.4f}; tau_T {tt:.4f}")


def test_criterion_13_wiman_valiron(acceptance_log):
    with Criterion(acceptance_log, 13, "central-index approximation of derivatives", 5) as c:
        for sid in ("wiman_valiron_exp", "wiman_valiron_gauss"):
            assert run_scenario(scenario(sid)).verdict == PASS
        d1 = wiman_valiron_deviation(entire("exp(z)"), 20.0, 1)
        d2 = wiman_valiron_deviation(entire("exp(z)"), 20.0, 2)
        dg = wiman_valiron_deviation(entire("exp(z^2)"), 4.0, 1)
        assert d1 <= 1e-9 and d2 <= 1e-9 and dg <= 0.1
        c.detail = f"e^z: {d1:.1e}, {d2:.1e}; e^(z^2): {dg:.2e}"


def _run_full_suite(out_dir):
    clear_caches()
    t0 = time.perf_counter()
    result = run_suite(load_default_suite(), str(out_dir))
    return result, time.perf_counter() - t0


def _stripped_reports(out_dir):
    """File name -> bytes, with the metadata block removed from report JSON."""
    out = {}
    for name in sorted(os.listdir(out_dir)):
        with open(os.path.join(out_dir, name), "rb") as fh:
            data = fh.read()
        if name.endswith(".json"):
            doc = json.loads(data)
            doc.pop("metadata", None)
            data = json.dumps(doc, sort_keys=True, indent=1).encode()
        elif name == "summary.txt":
            continue
        out[name] = data
    return out


@pytest.mark.slow
def test_criterion_14_determinism(acceptance_log, tmp_path):
    with Criterion(acceptance_log, 14, "full bundled suite twice: identical reports", 600) as c:
        first, t1 = _run_full_suite(tmp_path / "a")
        second, t2 = _run_full_suite(tmp_path / "b")
        assert first.ok and second.ok, first.summary()
        assert t1 < 300 and t2 < 300
        a, b = _stripped_reports(tmp_path / "a"), _stripped_reports(tmp_path / "b")
        assert a.keys() == b.keys()
        differ = [k for k in a if a[k] != b[k]]
        assert not differ, differ
        c.detail = (f"{len(first.reports)} scenarios all as expected; {len(a)} files identical; "
                    f"runs {t1:.0f} s and {t2:.0f} s")
