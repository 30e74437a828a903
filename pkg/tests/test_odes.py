import cmath
import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abgrowth.odes import (DegenerateWronskian, IntegrationError, LinearODE, ReductionError,
                           abel_discrepancy, fan_angles, find_roots, integrate_ray,
                           polynomial_zero_bound, reconstruct_coefficient, reduce_order,
                           reduction_residual, solution_basis, solution_log_M,
                           verify_roots_within, wronskian_at)
from abgrowth.odes import integrate as integ

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
COS = "(exp(i*z) + exp(-i*z))/2"
SIN = "(exp(i*z) - exp(-i*z))/(2*i)"


def trace_values(tr, j=0):
    return np.array([tr.value(i, j).to_complex() for i in range(len(tr.radii))])


# --- single rays ---------------------------------------------------------------------

def test_exponential_on_real_ray():
    tr = integrate_ray("-1", [1.0], 0.0, 5.0, tol=1e-10)
    assert tr.completed
    assert tr.log_abs[-1, 0] == pytest.approx(5.0, abs=1e-9)
    assert np.allclose(tr.log_abs[:, 0], tr.radii, atol=1e-9)


def test_sine_at_quarter_period():
    tr = integrate_ray("1; 0", [0.0, 1.0], 0.0, math.pi / 2, tol=1e-10)
    assert tr.value(len(tr.radii) - 1).to_complex() == pytest.approx(1.0, abs=1e-9)


def test_double_exponential_solution():
    # f' = e^z f with f(0) = 1 is exp(e^z - 1)
    tr = integrate_ray("-exp(z)", [1.0], 0.0, 5.0, tol=1e-10)
    assert tr.log_abs[-1, 0] == pytest.approx(math.exp(5.0) - 1, rel=1e-6)


def test_complex_direction_matches_closed_form():
    theta = 1.1
    tr = integrate_ray("2; -3", [1.0, 0.0], theta, 3.0, tol=1e-11)
    z = tr.radii * np.exp(1j * theta)
    want = 2 * np.exp(z) - np.exp(2 * z)
    assert np.allclose(trace_values(tr), want, rtol=1e-8)


def test_renormalization_keeps_huge_values_finite():
    tr = integrate_ray("-exp(z)", [1.0], 0.0, 8.0, tol=1e-9)
    assert tr.completed and tr.renorm_count > 0
    assert tr.log_abs[-1, 0] == pytest.approx(math.exp(8.0) - 1, rel=1e-6)


def test_tolerance_convergence():
    coarse = integrate_ray("-z; 0", [1.0, 0.0], 0.3, 6.0, tol=1e-6)
    fine = integrate_ray("-z; 0", [1.0, 0.0], 0.3, 6.0, tol=1e-12)
    gap_coarse = np.max(np.abs(coarse.log_abs - fine.log_abs))
    mid = integrate_ray("-z; 0", [1.0, 0.0], 0.3, 6.0, tol=1e-9)
    gap_mid = np.max(np.abs(mid.log_abs - fine.log_abs))
    assert gap_mid < gap_coarse
    assert gap_coarse < 1e-3


@pytest.mark.parametrize("tol", [1e-13, 1e-5, 0.0])
def test_tolerance_range_enforced(tol):
    with pytest.raises(ValueError):
        integrate_ray("-1", [1.0], 0.0, 1.0, tol=tol)


def test_step_budget_gives_partial_trace():
    tr = integrate_ray("-z^3", [1.0], 0.0, 50.0, tol=1e-10, step_budget=50)
    assert tr.terminated_reason == "step_budget"
    assert not tr.completed
    assert tr.r_reached < 50.0
    assert len(tr.radii) < 64
    assert np.all(np.isfinite(tr.log_abs))


def test_initial_condition_count_checked():
    with pytest.raises(ValueError):
        integrate_ray("1; 0", [1.0], 0.0, 1.0)


def test_generic_kernel_matches_generated(monkeypatch):
    args = ("-exp(z) + z; 2", [1.0, 0.5j], 0.7, 4.0)
    fast = integrate_ray(*args, tol=1e-10)
    monkeypatch.setattr(integ, "KERNELS", {})
    slow = integrate_ray(*args, tol=1e-10)
    assert fast.steps == slow.steps
    assert np.allclose(trace_values(fast), trace_values(slow), rtol=1e-12)


def test_generated_kernels_up_to_date():
    out = subprocess.run([sys.executable, os.path.join(ROOT, "tools", "gen_kernels.py")],
                         capture_output=True, text=True, check=True).stdout
    with open(os.path.join(ROOT, "src", "abgrowth", "odes", "_kernels.py"), encoding="utf-8") as fh:
        assert fh.read() == out


# --- bases and the maximum modulus ---------------------------------------------------------

def test_fan_angles_exclusion():
    kept, dropped = fan_angles(12, (0.0, 0.3))
    assert len(kept) == 11 and dropped.tolist() == [0.0]
    kept, dropped = fan_angles(12, [(0.0, 0.3), (math.pi, 0.3)])
    assert len(kept) == 10


def test_basis_two_exponentials():
    handles = solution_basis("2; -3", fan=[0.0, 2.0], r_max=2.0, tol=1e-11, threads=1)
    f1, f2 = handles
    for h, fun in [(f1, lambda z: 2 * np.exp(z) - np.exp(2 * z)),
                   (f2, lambda z: np.exp(2 * z) - np.exp(z))]:
        for t in h.traces:
            z = t.radii * np.exp(1j * t.theta)
            assert np.allclose(trace_values(t), fun(z), rtol=1e-8, atol=1e-12)


def test_basis_cosine_and_sine():
    c, s = solution_basis("1; 0", fan=[0.0, math.pi / 2], r_max=3.0, tol=1e-11, threads=1)
    real, imag = c.traces
    assert np.allclose(trace_values(real), np.cos(real.radii), atol=1e-9)
    assert np.allclose(trace_values(imag), np.cosh(imag.radii), rtol=1e-9)
    assert np.allclose(trace_values(s.traces[0]), np.sin(real.radii), atol=1e-9)


def test_basis_gaussian():
    (h,) = solution_basis("2*z", fan=[0.0, math.pi / 2], r_max=2.0, tol=1e-11, threads=1)
    real, imag = h.traces
    assert np.allclose(real.log_abs[:, 0], -real.radii ** 2, atol=1e-8)
    assert np.allclose(imag.log_abs[:, 0], imag.radii ** 2, atol=1e-8)


def test_solution_log_M_examples():
    (e,) = solution_basis("-1", r_max=3.0, tol=1e-10, threads=1)
    assert solution_log_M(e, 3.0) == pytest.approx(3.0, abs=1e-8)
    c, _ = solution_basis("1; 0", r_max=3.0, tol=1e-10, threads=1)
    # max over the circle of |cos z| is cosh r, attained on the imaginary axis
    assert solution_log_M(c, 3.0) == pytest.approx(math.log(math.cosh(3.0)), abs=1e-8)
    (g,) = solution_basis("2*z", r_max=2.0, tol=1e-10, threads=1)
    assert solution_log_M(g, 2.0) == pytest.approx(4.0, abs=1e-8)


def test_solution_log_M_beyond_reach():
    (e,) = solution_basis("-1", fan=[0.0], r_max=3.0, tol=1e-10, threads=1)
    with pytest.raises(IntegrationError):
        solution_log_M(e, 4.0)
    assert math.isnan(solution_log_M(e, 4.0, strict=False))


def test_profile_is_running_max():
    (e,) = solution_basis("-1", r_max=3.0, tol=1e-10, threads=1)
    prof = e.log_M_profile(np.linspace(0.5, 3.0, 6))
    assert np.all(np.diff(prof) >= 0)


def test_threads_do_not_change_results():
    a = solution_basis("-z; 0", fan=fan_angles(16)[0], r_max=4.0, tol=1e-9, threads=1)
    b = solution_basis("-z; 0", fan=fan_angles(16)[0], r_max=4.0, tol=1e-9, threads=4)
    for ha, hb in zip(a, b):
        for ta, tb in zip(ha.traces, hb.traces):
            assert np.array_equal(ta.mantissa, tb.mantissa)
            assert np.array_equal(ta.log_scale, tb.log_scale)


# --- Wronskian ----------------------------------------------------------------------------

@pytest.fixture(scope="module")
def exp_basis():
    return solution_basis("2; -3", fan=fan_angles(8)[0], r_max=3.0, tol=1e-11, threads=1)


def test_wronskian_at_origin_is_one(exp_basis):
    w = wronskian_at(exp_basis, 0j)
    assert w.to_complex() == 1.0


def test_wronskian_closed_form(exp_basis):
    # W = e^{3z} for this equation
    t = exp_basis[0].traces[1]
    for i in (10, 40, 63):
        z = t.radii[i] * cmath.exp(1j * t.theta)
        assert wronskian_at(exp_basis, z).to_complex() == pytest.approx(cmath.exp(3 * z), rel=1e-8)


def test_coefficients_reconstructed(exp_basis):
    t = exp_basis[0].traces[3]
    for i in (5, 30, 60):
        z = t.radii[i] * cmath.exp(1j * t.theta)
        assert reconstruct_coefficient(exp_basis, 1, z).to_complex() == pytest.approx(-3, rel=1e-9)
        assert reconstruct_coefficient(exp_basis, 2, z).to_complex() == pytest.approx(2, rel=1e-9)


def test_coefficients_reconstructed_trigonometric():
    hs = solution_basis("1; 0", fan=[0.5], r_max=3.0, tol=1e-11, threads=1)
    z = 3.0 * cmath.exp(0.5j)
    assert abs(reconstruct_coefficient(hs, 1, z).to_complex()) <= 1e-9
    assert reconstruct_coefficient(hs, 2, z).to_complex() == pytest.approx(1.0, rel=1e-9)


def test_abel_identity(exp_basis):
    assert abel_discrepancy(exp_basis, 2) <= 1e-6
    airy = solution_basis("-z; 0", fan=[0.4], r_max=5.0, tol=1e-11, threads=1)
    assert abel_discrepancy(airy) <= 1e-6


def test_wronskian_needs_sampled_point(exp_basis):
    with pytest.raises(IntegrationError):
        wronskian_at(exp_basis, 1.2345 + 0j)


def test_wronskian_rejects_dependent_set(exp_basis):
    with pytest.raises(DegenerateWronskian):
        t = exp_basis[0].traces[0]
        wronskian_at([exp_basis[0], exp_basis[0]], t.radii[10])


# --- reduction of order ---------------------------------------------------------------------

def test_reduce_by_exponential():
    red = reduce_order("2; -3", "exp(z)")
    assert red.k == 1
    vals = red.coefficient_values(np.array([0.3, 1 + 2j, -2.0]))
    assert np.allclose(vals, -1.0, atol=1e-12)
    res = reduction_residual(red, "2; -3", "exp(z)", "exp(2*z)")
    assert res <= 1e-9


def test_reduce_by_second_exponential():
    red = reduce_order("2; -3", "exp(2*z)")
    assert np.allclose(red.coefficient_values(np.array([0.5j, 1.5])), 1.0, atol=1e-12)


def test_negative_control_fails_residual():
    red = reduce_order("2; -3", "exp(z)")
    assert reduction_residual(red, "2; -3", "exp(z)", nu="z") >= 0.1


def test_non_solution_rejected():
    with pytest.raises(ReductionError):
        reduce_order("2; -3", "exp(3*z)")


def test_reduce_trigonometric():
    # reducing by cos leaves nu' - 2 tan(z) nu = 0, solved by sec^2 = (tan)'
    red = reduce_order("1; 0", COS)
    pts = np.array([0.3, 0.5 + 0.5j, -1.0 + 0.2j, 2.0j])
    want = -2 * np.tan(pts)
    assert np.allclose(red.coefficient_values(pts)[:, 0], want, rtol=1e-9)
    assert reduction_residual(red, "1; 0", COS, SIN) <= 1e-6


def test_reduce_triple_derivative():
    red = reduce_order("0; 0; 0", "1")
    assert red.k == 2
    assert np.allclose(red.coefficient_values(np.array([1.0, 2j])), 0.0)
    assert reduction_residual(red, "0; 0; 0", "1", "z^2") <= 1e-12


def test_reduce_with_traced_solutions():
    c, s = solution_basis("1; 0", fan=[0.3, 2.0], r_max=1.2, tol=1e-11, threads=1)
    red = reduce_order("1; 0", c)
    assert reduction_residual(red, "1; 0", c, s) <= 1e-6


def test_excluded_points_where_solution_vanishes():
    red = reduce_order("1; 0", COS)
    vals = red.coefficient_values(np.array([math.pi / 2, 0.1]))
    assert np.isnan(vals[0]).all() and np.isfinite(vals[1]).all()


# --- polynomial zero bound --------------------------------------------------------------------

def test_zero_bound_examples():
    assert polynomial_zero_bound([2, -3, 1]) == 4.0
    assert polynomial_zero_bound([-1, 0, 0, 0, 0, 1]) == 2.0
    assert polynomial_zero_bound([0, 10, 0, 5]) == 3.0
    assert polynomial_zero_bound([7]) == 1.0
    with pytest.raises(ValueError):
        polynomial_zero_bound([1, 0])


def test_roots_match_numpy():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.normal(size=9) + 1j * rng.normal(size=9)
        ours = np.sort_complex(find_roots(a))
        ref = np.sort_complex(np.roots(a[::-1]))
        # match each reference root to its nearest computed root
        d = np.abs(ours[:, None] - ref[None, :])
        assert np.max(np.min(d, axis=0)) <= 1e-8


def test_roots_of_unity():
    r = find_roots([-1, 0, 0, 0, 0, 1])
    assert np.allclose(np.abs(r), 1.0, atol=1e-12)
    assert np.allclose(r ** 5, 1.0, atol=1e-11)


def test_roots_within_bound_seeded():
    rng = np.random.default_rng(20240611)
    for _ in range(200):
        n = int(rng.integers(1, 13))
        a = rng.uniform(-10, 10, n + 1) + 1j * rng.uniform(-10, 10, n + 1)
        assert verify_roots_within(a)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False),
                min_size=2, max_size=10).filter(lambda c: abs(c[-1]) > 1e-3))
def test_roots_within_bound_property(coeffs):
    R = polynomial_zero_bound(coeffs)
    roots = np.roots(np.asarray(coeffs, complex)[::-1])
    assert np.all(np.abs(roots) <= R * (1 + 1e-9))
