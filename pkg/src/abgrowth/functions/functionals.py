"""Growth functionals of entire and meromorphic functions at a radius."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import expr as ex
from .entire import EntireFunction, MeromorphicFunction, derivative

NU_TIE_RTOL = 1e-12


class QuadratureError(RuntimeError):
    pass


class InapplicableError(ValueError):
    """The requested quantity is not defined for this input."""


@dataclass
class GrowthSample:
    r: float
    log_M: float | None
    log_mu: float | None
    nu: int | None
    m: float
    N: float
    T: float


def _log_terms(f, r):
    coeffs = ex.series_coeffs_for_radius(f.node, r)
    with np.errstate(invalid="ignore"):
        return coeffs.real + np.arange(len(coeffs)) * math.log(r)


def max_term_and_index(f: EntireFunction, r: float):
    """(log mu(r), nu(r)): largest term |a_n| r^n and the largest index attaining it."""
    if r <= 0:
        raise ValueError("radius must be positive")
    t = _log_terms(f, r)
    finite = np.isfinite(t)
    if not finite.any():
        return -math.inf, 0
    tt = np.where(finite, t, -np.inf)
    mu = float(tt.max())
    tie = tt >= mu - NU_TIE_RTOL * max(1.0, abs(mu))
    nu = int(np.nonzero(tie)[0].max())
    return mu, nu


def _circle(r, n, offset=0.0):
    th = offset + 2 * np.pi * np.arange(n) / n
    return th, r * np.exp(1j * th)


def argmax_modulus(f, r, *, start=256, rtol=1e-3, max_points=1 << 16, polish=True):
    """(log M(r), theta) by circle sampling with point doubling and a local polish."""
    if r <= 0:
        raise ValueError("radius must be positive")
    if getattr(f, "nonneg_coefficients", False):
        return float(f.log_abs(np.array([r + 0j]))[0]), 0.0
    n = start
    th, z = _circle(r, n)
    vals = f.log_abs(z)
    best = float(np.max(vals))
    while n < max_points:
        # new points are the midpoints of the previous set
        th2, z2 = _circle(r, n, np.pi / n)
        v2 = f.log_abs(z2)
        th = np.concatenate([th, th2])
        vals = np.concatenate([vals, v2])
        n *= 2
        new = float(np.max(vals))
        done = abs(new - best) <= rtol * max(1.0, abs(new))
        best = new
        if done:
            break
    i = int(np.argmax(vals))
    theta = float(th[i])
    if polish:
        h = 2 * np.pi / n
        res = minimize_scalar(lambda t: -float(f.log_abs(np.array([r * np.exp(1j * t)]))[0]),
                              bounds=(theta - h, theta + h), method="bounded",
                              options={"xatol": 1e-12})
        if res.success and -res.fun > best:
            best = float(-res.fun)
            theta = float(res.x)
    return best, theta


def log_max_modulus(f, r, **policy):
    """log M(r, f) = max of log|f| on |z| = r.

    Exact shortcut when all Taylor coefficients are nonnegative (the maximum
    is then at z = r); otherwise circle sampling.
    """
    return argmax_modulus(f, r, **policy)[0]


def _kink_trapezoid(g):
    """Mean of max(g, 0) over equispaced periodic samples g of log|f|.

    Panels where g changes sign integrate the clipped linear interpolant,
    and each crossing adds the Euler-Maclaurin term h^2/12 |g'|, so the
    kinks of log+ do not limit the rule to erratic second order.
    """
    n = len(g)
    h = 2 * np.pi / n
    b = np.roll(g, -1)
    cross = (g > 0) != (b > 0)
    jump = np.abs(g - b)
    top = np.maximum(g, b)
    panel = np.where(cross, top * top / (2 * np.where(cross, jump, 1.0)),
                     (np.maximum(g, 0.0) + np.maximum(b, 0.0)) / 2)
    return float(np.mean(panel) + h * np.sum(jump[cross]) / (24 * np.pi))


def proximity_m(f, r, *, start=256, rtol=1e-8, atol=1e-12, budget=1 << 20):
    """m(r, f): circle mean of log+|f| by the trapezoid rule with panel doubling."""
    if r <= 0:
        raise ValueError("radius must be positive")
    for attempt in range(2):
        n = start
        _, z = _circle(r, n)
        g = f.log_abs(z)
        if not np.all(np.isfinite(np.maximum(g, 0.0))):
            r = r * (1 + 1e-9)  # a pole sits on the circle: nudge the radius
            continue
        est = _kink_trapezoid(g)
        while True:
            if 2 * n > budget:
                raise QuadratureError(f"m({r:g}) not converged within {budget} panels")
            _, z2 = _circle(r, n, np.pi / n)
            g2 = f.log_abs(z2)
            if not np.all(np.isfinite(np.maximum(g2, 0.0))):
                break
            both = np.empty(2 * n)
            both[0::2], both[1::2] = g, g2
            g, n = both, 2 * n
            new = _kink_trapezoid(g)
            if abs(new - est) <= max(rtol * abs(new), atol):
                return new
            est = new
        r = r * (1 + 1e-9)
    raise QuadratureError(f"pole on or near the circle |z| = {r:g}")


def counting_N(f, r):
    """N(r, f) from the declared pole divisor (zero for entire functions)."""
    if isinstance(f, EntireFunction):
        return 0.0
    if r > f.valid_radius:
        raise ValueError(f"r={r} beyond the declared divisor radius {f.valid_radius}")
    total = 0.0
    for p, mult in f.poles:
        a = abs(p)
        if 0 < a <= r:
            total += mult * math.log(r / a)
    return total + f.n0 * math.log(r)


def characteristic_T(f, r):
    """All functionals at radius r; T = m + N."""
    m = proximity_m(f, r)
    N = counting_N(f, r)
    log_M = log_mu = nu = None
    if isinstance(f, EntireFunction):
        log_M = log_max_modulus(f, r)
        try:
            log_mu, nu = max_term_and_index(f, r)
        except ex.TruncationError:
            pass
    return GrowthSample(r, log_M, log_mu, nu, m, N, m + N)


def wiman_valiron_deviation(f: EntireFunction, r: float, m: int):
    """|f^(m)(z_r) (z_r/nu)^m / f(z_r) - 1| at a maximum-modulus point z_r."""
    if f.is_polynomial:
        raise InapplicableError("Wiman-Valiron comparison needs a transcendental function")
    _, theta = argmax_modulus(f, r)
    zr = r * np.exp(1j * theta)
    _, nu = max_term_and_index(f, r)
    if nu == 0:
        raise InapplicableError("central index is zero at this radius")
    w = derivative(f, m).logval(np.array([zr]))[0] - f.logval(np.array([zr]))[0]
    w = w + m * (np.log(zr) - math.log(nu))
    return float(abs(np.exp(w) - 1.0))
