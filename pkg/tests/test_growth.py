import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abgrowth.functions import derivative, entire
from abgrowth.growth import (M_BASED, T_BASED, EstimatorError, RadialGrid, estimate_order,
                             estimate_type, growth_profile, slope_fit, tail_sup)
from abgrowth.scales import triple_from_spec

ID3 = triple_from_spec("id,id,id")
LOG = triple_from_spec("log,id,id")


# --- helpers ------------------------------------------------------------------------

def test_tail_sup_examples():
    assert tail_sup([0.2, 0.9, 0.8], 2 / 3) == 0.9
    assert tail_sup([0.4] * 7, 0.5) == 0.4
    assert tail_sup(list(range(10)), 0.3) == 9


def test_slope_fit_examples():
    x = np.linspace(0, 5, 20)
    s, res = slope_fit(np.column_stack([x, 1.5 * x + 2]))
    assert s == pytest.approx(1.5, abs=1e-13) and res < 1e-13
    s, _ = slope_fit(np.column_stack([x, np.full_like(x, 3.0)]))
    assert s == pytest.approx(0.0, abs=1e-14)
    y = 2 * x + 0.01 * (-1) ** np.arange(len(x))
    s, _ = slope_fit(np.column_stack([x, y]))
    assert abs(s - 2) <= 0.01


def test_slope_fit_rejects_bad_input():
    with pytest.raises(EstimatorError):
        slope_fit(np.column_stack([np.arange(5.0), np.arange(5.0)]))
    with pytest.raises(EstimatorError):
        slope_fit(np.column_stack([np.ones(10), np.arange(10.0)]))


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(-3, 3), st.floats(0.1, 3.0))
def test_slope_fit_recovers_power_law(p, c, span):
    r = np.exp(np.linspace(1.0, 1.0 + span, 30))
    y = p * np.log(r) + c
    s, res = slope_fit(np.column_stack([np.log(r), y]))
    assert s == pytest.approx(p, rel=1e-9)


def test_grid_validation():
    with pytest.raises(ValueError):
        RadialGrid(r0=1.0)
    with pytest.raises(ValueError):
        RadialGrid(q=1.0)
    with pytest.raises(ValueError):
        RadialGrid(count=10)
    g = RadialGrid.spanning(4.0, 60.0, 40)
    assert g.radii[0] == pytest.approx(4.0) and g.radii[-1] == pytest.approx(60.0)
    assert np.all(np.isfinite(g.radii))


# --- order estimates ------------------------------------------------------------------

def test_order_exp_T_based():
    est = estimate_order(entire("exp(z)"), ID3, RadialGrid(), T_BASED)
    assert est.kind == "order"
    assert est.value_slope == pytest.approx(1.0, abs=1e-6)
    # the tail-sup is biased by log(1/pi)/log r but bounded above by 1
    assert 0.75 < est.value_tail_sup < 1.0
    r = np.array([row[0] for row in est.samples])
    T = np.array([row[2] for row in est.samples])
    assert np.allclose(T, r / math.pi, rtol=1e-6)


def test_order_exp_square_M_based():
    est = estimate_order(entire("exp(z^2)"), ID3, RadialGrid(), M_BASED)
    assert est.value_slope == pytest.approx(2.0, abs=1e-9)
    assert est.value_tail_sup == pytest.approx(2.0, abs=1e-9)


def test_order_iterated_exponential():
    grid = RadialGrid.spanning(4.0, 60.0, 40)
    est = estimate_order(entire("exp(exp(z))"), LOG, grid, M_BASED)
    assert est.value_slope == pytest.approx(1.0, abs=0.05)
    est = estimate_order(entire("exp(exp(z))"), ID3, grid, M_BASED, shifted=True)
    assert est.kind == "order_log_shifted"
    assert est.value_slope == pytest.approx(1.0, abs=0.05)


def test_samples_carry_fixed_columns():
    est = estimate_order(entire("exp(z)"), ID3, RadialGrid(), M_BASED)
    assert est.columns == ("r", "log_M", "T", "numerator", "denominator", "ratio")
    assert len(est.samples) == RadialGrid().count
    assert est.residual >= 0


def test_excluded_radii_reported():
    # log^[3] M = log log r is undefined for r <= e; those tail radii are listed
    grid = RadialGrid(r0=1.5, q=1.1, count=32, window_fraction=1.0)
    est = estimate_order(entire("exp(z)"), ID3, grid, M_BASED, shifted=True)
    below = [r for r in grid.radii if r <= math.e]
    assert est.excluded == pytest.approx(below)
    assert len(below) == 7


def test_exclusion_budget():
    # a polynomial has log log M < 1 on a small grid, so shifted logs are undefined in the tail
    with pytest.raises(EstimatorError):
        estimate_order(entire("z + 1"), ID3, RadialGrid(r0=1.1, q=1.01, count=20), M_BASED,
                       shifted=True)


# --- type estimates -------------------------------------------------------------------

def test_type_examples():
    g = RadialGrid()
    assert estimate_type(entire("exp(z)"), ID3, 1.0, g, M_BASED).value_slope == pytest.approx(1.0, rel=1e-9)
    assert estimate_type(entire("exp(2*z)"), ID3, 1.0, g, M_BASED).value_slope == pytest.approx(2.0, rel=1e-9)
    tau = estimate_type(entire("exp(z)"), ID3, 1.0, g, T_BASED)
    assert tau.kind == "type"
    assert tau.value_slope == pytest.approx(1 / math.pi, rel=1e-6)


def test_type_kinds():
    g = RadialGrid()
    assert estimate_type(entire("exp(z)"), ID3, 1.0, g, M_BASED).kind == "type_M"
    grid = RadialGrid.spanning(4.0, 60.0, 40)
    est = estimate_type(entire("exp(exp(z))"), ID3, 1.0, grid, M_BASED, shifted=True)
    assert est.kind == "type_log_shifted"


@pytest.mark.parametrize("sigma", [0.0, -1.0, math.inf, math.nan])
def test_type_needs_positive_finite_order(sigma):
    with pytest.raises(EstimatorError):
        estimate_type(entire("exp(z)"), ID3, sigma, RadialGrid(), M_BASED)


# --- invariance properties --------------------------------------------------------------

@pytest.mark.parametrize("mode", [T_BASED, M_BASED])
@pytest.mark.parametrize("a", [2.0, 10.0])
@pytest.mark.parametrize("spec", ["exp(z)", "exp(z^2)", "exp(z^2) + exp(z)"])
def test_scalar_invariance(spec, a, mode):
    f = entire(spec)
    base = estimate_order(f, ID3, RadialGrid(), mode).value_slope
    scaled = estimate_order(f.scaled(a), ID3, RadialGrid(), mode).value_slope
    assert abs(scaled - base) <= 0.02


@pytest.mark.parametrize("spec", ["exp(z)", "exp(z^2)", "exp(2*z) + z"])
def test_derivative_invariance(spec):
    f = entire(spec)
    for mode in (T_BASED, M_BASED):
        a = estimate_order(f, ID3, RadialGrid(), mode).value_slope
        b = estimate_order(derivative(f, 1), ID3, RadialGrid(), mode).value_slope
        assert abs(a - b) <= 0.05


@pytest.mark.parametrize("spec", ["exp(z)", "exp(z^2)"])
def test_mode_consistency_default_grid(spec):
    f = entire(spec)
    t = estimate_order(f, ID3, RadialGrid(), T_BASED).value_slope
    m = estimate_order(f, ID3, RadialGrid(), M_BASED).value_slope
    assert abs(t - m) <= 0.05


def test_mode_consistency_iterated_exponential():
    # T(r) of exp(e^z) is about e^r / r, beyond double range past r = 709
    grid = RadialGrid.spanning(4.0, 300.0, 40)
    f = entire("exp(exp(z))")
    t = estimate_order(f, ID3, grid, T_BASED, shifted=True).value_slope
    m = estimate_order(f, ID3, grid, M_BASED, shifted=True).value_slope
    assert abs(t - m) <= 0.05


def test_growth_profile_shapes():
    log_M, T = growth_profile(entire("exp(z)"), RadialGrid(), T_BASED)
    assert len(T) == RadialGrid().count
    assert np.allclose(T, RadialGrid().radii / math.pi, rtol=1e-6)
