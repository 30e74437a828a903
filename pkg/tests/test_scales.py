import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abgrowth.scales import (L1, L2, L3, ScaleDomainError, ScaleError, ScaleFunction, ScaleTriple,
                             builtin_scale, check_class, check_triple, class_grid,
                             condition_ratios, iter_exp, iter_log, scale_from_spec, scale_inverse,
                             triple_from_spec, triple_grid)

CATALOG = [builtin_scale("identity"), builtin_scale("iter_log", 1), builtin_scale("iter_log", 2),
           builtin_scale("power", 0.5), builtin_scale("affine", 2.0, 1.0)]


def test_catalog_values():
    assert builtin_scale("identity")(5.0) == 5.0
    assert builtin_scale("iter_log", 1)(1000.0) == pytest.approx(math.log(1000.0), rel=1e-15)
    assert builtin_scale("power", 0.5)(4.0) == pytest.approx(2.0, rel=1e-15)


def test_declared_classes():
    assert builtin_scale("identity").declared_class == L3
    assert builtin_scale("iter_log", 1).declared_class == L1
    assert builtin_scale("power", 0.5).declared_class == L3
    assert builtin_scale("affine", 3.0).declared_class == L3


def test_catalog_rejections():
    with pytest.raises(ScaleError):
        builtin_scale("power", 2.0)
    with pytest.raises(ScaleError):
        builtin_scale("cosh")
    with pytest.raises(ScaleError):
        builtin_scale("affine", -1.0)
    with pytest.raises(ScaleError):
        scale_from_spec({"name": "power", "s": 0.5, "bogus": 1})


def test_inverse_examples():
    assert scale_inverse(builtin_scale("identity"), 5.0) == 5.0
    assert scale_inverse(builtin_scale("iter_log", 1), 2.0) == pytest.approx(math.e ** 2, rel=1e-14)
    assert scale_inverse(builtin_scale("power", 0.5), 3.0) == pytest.approx(9.0, rel=1e-14)


def test_inverse_below_range():
    with pytest.raises(ScaleError):
        scale_inverse(builtin_scale("power", 0.5), -1.0)


@pytest.mark.parametrize("scale", CATALOG, ids=str)
def test_inverse_round_trip(scale):
    x = np.logspace(0.5, 6, 200)
    x = x[x > scale.floor + 1e-9]
    back = np.array([scale_inverse(scale, scale(v)) for v in x])
    assert np.all(np.abs(back - x) <= 1e-9 * np.maximum(1.0, np.abs(x)))


@pytest.mark.parametrize("scale", CATALOG, ids=str)
def test_monotone_and_floor(scale):
    x = np.linspace(0.0, 1e4, 5001)
    v = scale(x)
    assert np.all(np.diff(v) >= 0)
    assert v[-1] > scale(scale.floor)
    below = np.linspace(scale.floor - 5, scale.floor, 7)
    assert np.all(scale(below) == scale(scale.floor))


def test_iter_log_conventions():
    assert iter_log(2, math.exp(math.e)) == pytest.approx(1.0, rel=1e-15)
    assert iter_log(0, 7.3) == 7.3
    assert iter_log(-1, 2.0) == pytest.approx(math.exp(2.0), rel=1e-15)
    assert iter_exp(2, 0.0) == pytest.approx(math.e, rel=1e-15)
    with pytest.raises(ScaleDomainError):
        iter_log(3, 1.5)


def test_square_fails_subadditivity():
    square = ScaleFunction("power", (2.0,))
    assert square(2.0) - 2 * square(1.0) == 2.0
    rep = check_class(square, L3, class_grid(1.0, 1e3, 64))
    assert rep.verdict == "fail"
    assert rep.worst_violation >= 2.0


def test_sqrt_is_subadditive():
    rep = check_class(builtin_scale("power", 0.5), L3)
    assert rep.passed


def test_log_quasi_additive_with_zero_constant():
    grid = class_grid(2.0, 1e6, 64)
    rep = check_class(builtin_scale("iter_log", 1), L1, grid, c=0.0, R0=2.0)
    assert rep.passed
    # oracle: max of ln((a+b)/(ab)) over the grid is at a = b = 2, which is 0
    a, b = np.meshgrid(grid, grid)
    assert np.max(np.log((a + b) / (a * b))) <= 1e-12


def test_translation_stability():
    assert check_class(builtin_scale("iter_log", 1), L2).passed
    assert check_class(builtin_scale("identity"), L2).passed


def test_class_check_deterministic():
    g = class_grid(1.0, 1e4, 64)
    a = check_class(builtin_scale("power", 0.5), L3, g)
    b = check_class(builtin_scale("power", 0.5), L3, g)
    assert a == b


def test_condition_ratio_examples():
    t = triple_from_spec("log,id,id")
    x = math.exp(10.0)
    ratios = condition_ratios(t, np.array([x]))
    assert ratios["alpha(log^[2] x)/beta(log gamma x)"][0] == pytest.approx(
        math.log(math.log(10.0)) / 10.0, rel=1e-12)
    t = triple_from_spec("id,id,id")
    x = math.exp(math.exp(5.0))
    ratios = condition_ratios(t, np.array([x]))
    assert ratios["alpha(log^[2] x)/beta(log gamma x)"][0] == pytest.approx(5.0 / math.exp(5.0),
                                                                            rel=1e-12)


def test_triples_pass_conditions():
    assert check_triple(triple_from_spec("log,id,id")).passed
    assert check_triple(triple_from_spec("id,id,id")).passed


def test_gamma_square_fails_condition_one():
    square = ScaleFunction("power", (2.0,), declared_class=L3)
    t = ScaleTriple(builtin_scale("identity"), builtin_scale("identity"), square)
    rep = check_triple(t, triple_grid())
    assert not rep.passed
    assert rep.tested == "condition (i)"


def test_triple_grid_must_span_decades():
    with pytest.raises(ScaleError):
        check_triple(triple_from_spec("id,id,id"), np.logspace(8, 10, 50))


L3_SCALES = [s for s in CATALOG if s.declared_class == L3]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(L3_SCALES), st.floats(1.0, 1e6), st.integers(2, 50))
def test_multiple_bound_for_subadditive_scales(scale, r, m):
    assert scale(m * r) <= m * scale(r) * (1 + 1e-12) + 1e-12


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CATALOG), st.floats(1.0, 1e6), st.sampled_from([1.0, 10.0]))
def test_translation_sandwich(scale, r, R0):
    lo, mid = scale(r), scale(r + R0)
    assert lo <= mid
    if scale.declared_class == L3:
        assert mid <= lo + scale(R0) + 1e-9 * max(1.0, abs(mid))
    else:
        assert mid <= lo + scale(R0) + scale.quasi_additive_c + 1e-9 * max(1.0, abs(mid))
