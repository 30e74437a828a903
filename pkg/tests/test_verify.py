import json
import math
import os

import numpy as np
import pytest
from scipy import integrate

from abgrowth.growth import RadialGrid
from abgrowth.verify import (ERROR, FAIL, INAPPLICABLE, PASS, ConfigError, IntervalSet, Report,
                             geometric_intervals, lemma_interval_measure, lemma_logderiv_check,
                             lemma_mp_bound_check, load_default_suite, load_suite,
                             prop_order_algebra_suite, prop_type_algebra_suite, run_scenario,
                             run_suite, scenario_from_dict, suite_from_dict,
                             wiman_valiron_scenario, zero_bound_property)
from abgrowth.verify import scenarios as sc
from abgrowth.verify.report import write_report


def scenario(**kw):
    return scenario_from_dict(kw)


# --- interval sets -------------------------------------------------------------------

def test_interval_measure_examples():
    assert geometric_intervals(2, 10).log_measure() == pytest.approx(math.log(11 / 2), abs=1e-12)
    assert geometric_intervals(2, 10).log_measure() == pytest.approx(1.70475, abs=1e-5)
    assert IntervalSet.from_pairs([(1.0, math.e)]).log_measure() == pytest.approx(1.0, abs=1e-15)
    assert IntervalSet().log_measure() == 0.0
    assert len(geometric_intervals(3, 2)) == 0


def test_interval_measure_telescopes_far_out():
    # R_j = exp(j^2) overflows long before j = 10^6; log endpoints keep it exact
    s = geometric_intervals(2, 10 ** 6)
    assert s.log_measure() == pytest.approx(math.log((10 ** 6 + 1) / 2), abs=1e-9)


def test_interval_validation():
    with pytest.raises(ValueError):
        IntervalSet.from_pairs([(2.0, 4.0), (3.0, 5.0)])
    with pytest.raises(ValueError):
        IntervalSet.from_pairs([(0.5, 2.0)])
    with pytest.raises(ValueError):
        geometric_intervals(2, 10, log_R=lambda js: 0.01 * np.asarray(js, float))


def test_interval_contains():
    s = IntervalSet.from_pairs([(2.0, 3.0), (10.0, 20.0)])
    assert s.contains(2.5) and s.contains(20.0) and not s.contains(5.0) and not s.contains(1.5)


# --- reports ---------------------------------------------------------------------------

def test_report_verdicts_and_json(tmp_path):
    rep = Report("demo", "function_indicator")
    rep.check("close", 1.01, 1.0, 0.05)
    rep.check("relative", 2.1, 2.0, 0.1, "rel")
    rep.measured["bad"] = math.inf
    rep.table("rows", ["a", "b"], [[1.0, math.nan], [2.0, 3.0]])
    assert rep.finalize().verdict == PASS
    doc = json.loads(rep.to_json())
    assert doc["measured"]["bad"] == "inf"
    assert doc["evidence"]["rows"]["rows"][0][1] == "nan"
    path = write_report(rep, str(tmp_path))
    assert os.path.exists(path)
    with open(tmp_path / "demo.rows.csv") as fh:
        assert fh.readline().strip() == "a,b"
    rep.check("far", 2.0, 1.0, 0.05)
    assert rep.finalize().verdict == FAIL
    assert "far" in rep.summary_line()


def test_comparison_rejects_nonfinite():
    rep = Report("x", "k")
    assert not rep.check("nan", math.nan, 1.0, 10.0)


# --- scenario configuration ----------------------------------------------------------------

def test_unknown_keys_rejected():
    with pytest.raises(ConfigError):
        scenario(id="a", kind="function_indicator", f="exp(z)", bogus=1)
    with pytest.raises(ConfigError):
        scenario(id="a", kind="no_such_kind")
    with pytest.raises(ConfigError):
        scenario(id="a", kind="zero_bound_property", tolerances={"order": -1})
    with pytest.raises(ConfigError):
        sc.grid_from_spec({"r0": 4, "q": 1.1, "r_max": 40})


def test_suite_document_validation(tmp_path):
    with pytest.raises(ConfigError):
        suite_from_dict({"schema": "other/2", "scenarios": []})
    with pytest.raises(ConfigError):
        suite_from_dict({"scenarios": [{"id": "a", "kind": "lemma_interval_measure"}] * 2})
    with pytest.raises(ConfigError):
        suite_from_dict({"scenarios": [], "extra": 1})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_suite(str(bad))
    with pytest.raises(ConfigError):
        load_suite(str(tmp_path / "missing.json"))


def test_default_suite_loads():
    suite = load_default_suite()
    ids = [s.id for s in suite.scenarios]
    assert len(ids) == len(set(ids)) >= 14
    kinds = {s.kind for s in suite.scenarios}
    assert set(sc.KINDS) <= kinds
    assert all(s.provenance for s in suite.scenarios)


# --- verdict mapping -----------------------------------------------------------------------

def test_wrong_expected_order_fails():
    s = scenario(id="neg", kind="function_indicator", f="exp(z)",
                 estimates=[{"quantity": "order", "mode": "T_based", "value": 3.0}])
    rep = run_scenario(s)
    assert rep.verdict == FAIL
    assert not sc.outcome_ok(s, rep)


def test_hypothesis_failure_is_inapplicable_not_fail():
    s = scenario(id="nd", kind="theorem3", ode="1; exp(z)", expect="inapplicable")
    rep = run_scenario(s)
    assert rep.verdict == INAPPLICABLE
    assert "dominate" in rep.message
    assert sc.outcome_ok(s, rep)
    s2 = scenario(id="nd2", kind="theorem3", ode="1; exp(z)")
    assert not sc.outcome_ok(s2, run_scenario(s2))


def test_numerical_failure_is_error():
    s = scenario(id="err", kind="function_indicator", f="exp(z)",
                 estimates=[{"quantity": "type", "mode": "M_based", "sigma": 0.0, "value": 1.0}])
    assert run_scenario(s).verdict == ERROR


def test_config_errors_propagate():
    s = scenario(id="cfg", kind="lemma_mp_bound", ode="1; 0", exclude=[0.0, 0.3], r_max=4)
    with pytest.raises(ConfigError):
        run_scenario(s)


def test_metadata_excluded_from_comparison():
    s = scenario(id="iv", kind="lemma_interval_measure", j3=2, N=[10])
    a, b = run_scenario(s), run_scenario(s)
    assert a.as_dict(with_metadata=False) == b.as_dict(with_metadata=False)
    assert "runtime_s" in a.as_dict()["metadata"]
    assert "metadata" not in a.as_dict(with_metadata=False)


# --- lemma checks ---------------------------------------------------------------------------

def test_interval_measure_lemma():
    rep = lemma_interval_measure(2, [10, 1000])
    assert rep.verdict == PASS
    assert min(rep.measured["doubling_increments"]) > 0.5 * math.log(2)


def test_logderiv_exponential():
    rep = lemma_logderiv_check("exp(z)", 1, "id,id,id", RadialGrid(), 0.5)
    assert rep.verdict == PASS


def test_logderiv_pointwise_variant():
    rep = lemma_logderiv_check("exp(z^2)", 2, "id,id,id", RadialGrid(), 0.5, variant="pointwise")
    assert rep.verdict == PASS


def test_exceptional_set_flags_growing_ratio():
    grid = RadialGrid()
    rep = Report("grow", "lemma_logderiv")
    # ratio growing like r^3: no constant fitted on the early tail bounds the late tail
    sc._exceptional_set(rep, grid, grid.radii, np.log(grid.radii) * 3, 0.10)
    assert rep.finalize().verdict == FAIL
    rep = Report("flat", "lemma_logderiv")
    sc._exceptional_set(rep, grid, grid.radii, np.sin(grid.radii) * 0.1, 0.10)
    assert rep.finalize().verdict == PASS


def test_wiman_valiron_lemma():
    grid = RadialGrid(4.0, 1.1, 24)
    assert wiman_valiron_scenario("exp(z)", grid, 2).verdict == PASS
    with pytest.raises(sc.HypothesisNotMet):
        wiman_valiron_scenario("z^2", grid, 1)


def test_mp_bound_sine():
    sc.clear_caches()
    grid = RadialGrid.spanning(1.5, 8.0, 16)
    rep = lemma_mp_bound_check("1; 0", 1, grid, {"fan": 64, "tol": 1e-8, "r_max": 8.0})
    assert rep.verdict == PASS
    # oracle: m(r, sin) by adaptive quadrature (the fan is a 64-point trapezoid rule)
    for r, m, _, ratio in rep.evidence["radii"]["rows"][::3]:
        want = integrate.quad(lambda t: max(0.0, math.log(abs(np.sin(r * np.exp(1j * t))))),
                              0, 2 * math.pi, limit=400)[0] / (2 * math.pi)
        assert m == pytest.approx(want, rel=5e-3)
    # m(r, sin) ~ 2r/pi against ~ 2 pi r: the ratio climbs towards 1/pi^2
    ratios = [row[3] for row in rep.evidence["radii"]["rows"]]
    assert np.all(np.diff(ratios) > 0) and ratios[-1] < 1 / math.pi ** 2


def test_zero_bound_property_seeded():
    a = zero_bound_property(seed=5, count=50)
    b = zero_bound_property(seed=5, count=50)
    assert a.verdict == PASS
    assert a.as_dict(False) == b.as_dict(False)


# --- algebra of orders and types ---------------------------------------------------------------

def test_order_algebra_passes():
    rep = prop_order_algebra_suite("exp(z)", "exp(z^2)", "id,id,id", RadialGrid())
    assert rep.verdict == PASS
    assert rep.measured["sigma_sum"] == pytest.approx(2.0, abs=0.05)
    assert rep.measured["sigma_reciprocal_f1"] == pytest.approx(1.0, abs=0.05)


def test_order_algebra_equal_orders_records_hypothesis():
    rep = prop_order_algebra_suite("exp(z)", "exp(2*z)", "id,id,id", RadialGrid())
    assert rep.verdict == PASS
    assert any("hypothesis not satisfied" in o.get("status", "") for o in rep.observations)


def test_reciprocal_needs_T_mode():
    rep = prop_order_algebra_suite("exp(z)", "exp(z^3)", "id,id,id", RadialGrid(),
                                   mode="M_based", scalar=3.0)
    assert rep.verdict == PASS
    assert any("T-based" in o.get("status", "") for o in rep.observations)


def test_type_algebra_dominant_type():
    rep = prop_type_algebra_suite("exp(z)", "exp(2*z)", "id,id,id", RadialGrid())
    assert rep.verdict == PASS
    assert rep.measured["tau_M_sum"] == pytest.approx(2.0, rel=0.1)
    assert rep.measured["tau_T_sum"] == pytest.approx(2 / math.pi, rel=0.1)


def test_product_type_recorded_not_asserted():
    # e^z * e^{2z} = e^{3z} has type 3, above the larger of the two types
    rep = prop_type_algebra_suite("exp(z)", "exp(2*z)", "id,id,id", RadialGrid(),
                                  modes=("M_based",))
    obs = [o for o in rep.observations if o["name"].startswith("product type")]
    assert obs and obs[0]["status"] == "not asserted"
    assert obs[0]["measured"] == pytest.approx(3.0, rel=1e-6)
    assert obs[0]["bound_holds"] is False
    assert rep.verdict == PASS


# --- ODE helper kinds -------------------------------------------------------------------------------

def test_wronskian_and_reduction_scenarios():
    s = scenario(id="w", kind="wronskian_check", ode="2; -3", fan=8, r_max=3, tol=1e-10)
    assert run_scenario(s).verdict == PASS
    s = scenario(id="r", kind="reduction_check", ode="2; -3", f1="exp(z)", fj="exp(2*z)",
                 reduced=[-1], negative_nu="z")
    assert run_scenario(s).verdict == PASS
    s = scenario(id="r2", kind="reduction_check", ode="2; -3", f1="exp(z)", fj="exp(2*z)",
                 reduced=[5])
    assert run_scenario(s).verdict == FAIL


def test_theorem1_closed_form():
    sc.clear_caches()
    s = scenario(id="t1", kind="theorem1", ode="-exp(z)", fan=32, r_max=10, tol=1e-6,
                 closed_form={"expr": "exp(exp(z)-1)", "r_max": 5, "tol": 1e-10, "rtol": 1e-6},
                 tolerances={"order_shifted": 0.1})
    rep = run_scenario(s)
    assert rep.verdict == PASS, rep.summary_line()


# --- suites ------------------------------------------------------------------------------------------

def test_run_suite_writes_reports(tmp_path):
    suite = suite_from_dict({"seed": 3, "scenarios": [
        {"id": "iv", "kind": "lemma_interval_measure", "j3": 2, "N": [10]},
        {"id": "zb", "kind": "zero_bound_property", "count": 20},
    ]})
    assert suite.scenarios[1].params["seed"] == 3
    result = run_suite(suite, str(tmp_path))
    assert result.ok
    assert (tmp_path / "iv.json").exists() and (tmp_path / "zb.polynomials.csv").exists()
    text = (tmp_path / "summary.txt").read_text()
    assert "2 scenarios: 2 pass" in text
    doc = json.loads((tmp_path / "zb.json").read_text())
    assert doc["environment"]["seed"] == 3
