import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from abgrowth.functions import (DepthExceeded, ExpressionSyntaxError, InapplicableError,
                                MeromorphicFunction, ScaledComplex, characteristic_T, counting_N,
                                derivative, entire, eval_at, log_max_modulus,
                                max_term_and_index, proximity_m, wiman_valiron_deviation)


def quad_m(fun, r):
    """Oracle m(r, f) by adaptive quadrature of log+|f| over the circle."""
    def g(t):
        return max(0.0, math.log(abs(fun(r * complex(math.cos(t), math.sin(t))))))
    val, _ = integrate.quad(g, 0, 2 * math.pi, limit=400, epsabs=1e-13, epsrel=1e-12)
    return val / (2 * math.pi)


# --- split-magnitude arithmetic ------------------------------------------------

def test_scaled_mantissa_window():
    for v in [1e-300, 3.0, -7.5 + 2j, 1e300]:
        s = ScaledComplex.from_complex(v)
        assert 1.0 <= abs(s.mantissa) < math.e
        assert s.to_complex() == pytest.approx(v, rel=1e-12)  # log-scale ulp near 690
    z = ScaledComplex.zero()
    assert z.is_zero and z.log_scale == -math.inf


def test_scaled_addition_absorbs_tiny_terms():
    big = ScaledComplex.from_log(100.0 + 0j)
    tiny = ScaledComplex.from_log(50.0 + 0j)
    assert (big + tiny) == big


def test_scaled_huge_values_stay_finite():
    a = ScaledComplex.from_log(1e6 + 0.5j)
    b = ScaledComplex.from_log(-3e5 + 0j)
    assert (a * b).log_abs() == pytest.approx(7e5, rel=1e-14)
    assert (a / b).log_abs() == pytest.approx(1.3e6, rel=1e-14)


logs = st.floats(-700, 700)


@settings(max_examples=300, deadline=None)
@given(logs, logs, logs, st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_scaled_multiplication_associates(la, lb, lc, pa, pb, pc):
    a = ScaledComplex.from_log(complex(la, pa))
    b = ScaledComplex.from_log(complex(lb, pb))
    c = ScaledComplex.from_log(complex(lc, pc))
    x, y = ((a * b) * c).log_abs(), (a * (b * c)).log_abs()
    assert abs(x - y) <= 1e-12 * max(1.0, abs(x))


# --- expressions, evaluation, derivatives --------------------------------------

def test_eval_examples():
    assert eval_at(entire("exp(z)"), 1000).log_abs() == pytest.approx(1000.0, rel=1e-15)
    assert eval_at(entire("z^3 - 1"), 2).to_complex() == pytest.approx(7.0, rel=1e-15)
    assert eval_at(entire("exp(exp(z))"), 3).log_abs() == pytest.approx(math.exp(3.0), rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_eval_matches_numpy(x, y):
    z = complex(x, y)
    f = entire("exp(z^2) * (z + 2) + 3*exp(-z)")
    want = np.exp(z * z) * (z + 2) + 3 * np.exp(-z)
    assert eval_at(f, z).to_complex() == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_parse_error_has_position():
    with pytest.raises(ExpressionSyntaxError) as info:
        entire("exp(")
    assert info.value.position == 4
    assert "^" in str(info.value)


def test_derivative_examples():
    zs = np.array([0.3 + 0.2j, -1.0 + 0.5j, 2.0 - 1.0j])
    d = derivative(entire("exp(2*z)"), 1)
    assert np.allclose(np.exp(d.logval(zs)), 2 * np.exp(2 * zs), rtol=1e-13)
    d = derivative(entire("z^3"), 2)
    assert np.allclose(np.exp(d.logval(zs)), 6 * zs, rtol=1e-13)
    d = derivative(entire("exp(exp(z))"), 1)
    assert np.allclose(np.exp(d.logval(zs)), np.exp(zs) * np.exp(np.exp(zs)), rtol=1e-12)


def test_derivative_depth_limit():
    with pytest.raises(DepthExceeded):
        derivative(entire("exp(z)"), 9)


# --- maximum term and central index --------------------------------------------

def test_max_term_examples():
    log_mu, nu = max_term_and_index(entire("exp(z)"), 2.5)
    terms = [2.5 ** n / math.factorial(n) for n in range(51)]
    assert math.exp(log_mu) == pytest.approx(max(terms), rel=1e-13) == pytest.approx(3.125)
    assert nu == 2
    # 10^9/9! = 10^10/10!: the tie resolves to the larger index
    assert max_term_and_index(entire("exp(z)"), 10.0)[1] == 10
    log_mu, nu = max_term_and_index(entire("z^3"), 1.7)
    assert nu == 3 and log_mu == pytest.approx(3 * math.log(1.7), rel=1e-14)


def test_central_index_nondecreasing():
    f = entire("exp(z^2) + z")
    nus = [max_term_and_index(f, r)[1] for r in np.linspace(0.5, 12, 60)]
    assert all(b >= a for a, b in zip(nus, nus[1:]))


# --- maximum modulus -------------------------------------------------------------

def test_log_max_modulus_examples():
    assert log_max_modulus(entire("exp(z)"), 7.0) == pytest.approx(7.0, rel=1e-12)
    assert log_max_modulus(entire("exp(z^2)"), 3.0) == pytest.approx(9.0, rel=1e-12)
    want = math.log(math.exp(5) + math.exp(-5))
    assert log_max_modulus(entire("exp(z) + exp(-z)"), 5.0) == pytest.approx(want, rel=1e-9)


def test_max_modulus_rotating_maximum():
    # |exp(-z^2)| peaks on the imaginary axis, away from the positive real axis
    assert log_max_modulus(entire("exp(-z^2)"), 2.0) == pytest.approx(4.0, rel=1e-6)


@pytest.mark.parametrize("spec", ["exp(z)", "exp(z^2) + z", "exp(exp(z))", "z^5 - 3*z"])
def test_cauchy_and_monotone(spec):
    f = entire(spec)
    rs = np.linspace(0.5, 4, 15)
    lm = np.array([log_max_modulus(f, r) for r in rs])
    assert np.all(np.diff(lm) > 0)
    for r, v in zip(rs, lm):
        assert max_term_and_index(f, r)[0] <= v + 1e-9 * max(1.0, abs(v))


# --- proximity, counting, characteristic ----------------------------------------

@pytest.mark.parametrize("r", [1.0, 10.0, 100.0])
def test_proximity_exp_closed_form(r):
    assert proximity_m(entire("exp(z)"), r) == pytest.approx(r / math.pi, rel=1e-6)


def test_proximity_examples():
    assert proximity_m(entire("1"), 3.0) == 0.0
    assert proximity_m(entire("z"), math.e ** 2) == pytest.approx(2.0, rel=1e-12)


@pytest.mark.parametrize("spec,fun,r", [
    ("z^2 - 1", lambda z: z * z - 1, 1.3),
    ("exp(z) + 2*z", lambda z: np.exp(z) + 2 * z, 3.0),
    ("exp(z^2) - 5", lambda z: np.exp(z * z) - 5, 2.0),
])
def test_proximity_matches_adaptive_quadrature(spec, fun, r):
    assert proximity_m(entire(spec), r) == pytest.approx(quad_m(fun, r), rel=1e-7, abs=1e-10)


def test_counting_examples():
    one = entire("1")
    inv_z = MeromorphicFunction(one, entire("z"), ((0, 1),))
    assert counting_N(inv_z, math.e) == pytest.approx(1.0, rel=1e-15)
    inv_z1 = MeromorphicFunction(one, entire("z - 1"), ((1, 1),))
    assert counting_N(inv_z1, math.e) == pytest.approx(1.0, rel=1e-15)
    assert counting_N(entire("exp(z)"), 5.0) == 0.0


def test_declared_pole_must_be_zero_of_denominator():
    with pytest.raises(ValueError):
        MeromorphicFunction(entire("1"), entire("z - 1"), ((2, 1),))


def test_divisor_radius_enforced():
    f = MeromorphicFunction(entire("1"), entire("z - 1"), ((1, 1),), valid_radius=2.0)
    with pytest.raises(ValueError):
        counting_N(f, 3.0)


def test_characteristic_examples():
    s = characteristic_T(entire("exp(z)"), math.pi)
    assert s.T == pytest.approx(1.0, rel=1e-8) and s.N == 0.0 and s.T == s.m
    assert characteristic_T(entire("z"), math.e ** 2).T == pytest.approx(2.0, rel=1e-12)
    inv_z = MeromorphicFunction(entire("1"), entire("z"), ((0, 1),))
    s = characteristic_T(inv_z, math.e)
    assert s.m == pytest.approx(0.0, abs=1e-12) and s.N == pytest.approx(1.0)
    assert s.T == s.m + s.N


@pytest.mark.parametrize("spec", ["exp(z)", "exp(z^2) + 1", "exp(2*z) - exp(z)"])
def test_T_M_sandwich(spec):
    f = entire(spec)
    for r in [1.0, 2.5, 4.0]:
        T = proximity_m(f, r)
        lm = max(0.0, log_max_modulus(f, r))
        assert T <= lm + 1e-8
        assert lm <= 3 * proximity_m(f, 2 * r) + 1e-8


# --- Wiman-Valiron ----------------------------------------------------------------

def test_wiman_valiron_examples():
    f = entire("exp(z)")
    assert wiman_valiron_deviation(f, 20.0, 1) <= 1e-9
    assert wiman_valiron_deviation(f, 20.0, 2) <= 1e-9
    assert wiman_valiron_deviation(entire("exp(z^2)"), 4.0, 1) <= 0.1
    with pytest.raises(InapplicableError):
        wiman_valiron_deviation(entire("z^3 + 1"), 4.0, 1)
