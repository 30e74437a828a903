"""Independent numerical helpers used by the scenarios."""
from __future__ import annotations

import math

import numpy as np

from ..functions import EntireFunction, derivative
from ..functions import expr as ex


class _LogQuotient:
    """f^(k) / f as an object with ``log_abs`` (for m and M of the quotient)."""

    def __init__(self, f: EntireFunction, k: int, i: int = 0):
        self.num = derivative(f, k)
        self.den = derivative(f, i)

    def log_abs(self, z):
        with np.errstate(invalid="ignore"):
            return self.num.log_abs(z) - self.den.log_abs(z)


def polynomial_coefficients(ode):
    """Coefficient lists a[j][i] of polynomial A_j, or None if any A_j is not a polynomial."""
    out = []
    for c in ode.coefficients:
        if not c.is_polynomial:
            return None
        node = c.node
        out.append([complex(x) for x in node.coeffs] if isinstance(node, ex.Poly)
                   else _expand_poly(node))
    return out


def _expand_poly(node):
    # polynomial-valued trees (sums/products of Poly) collapse through the Taylor route
    logs = ex.taylor_log(node, 64)
    vals = np.exp(logs)
    nz = np.nonzero(np.abs(vals) > 1e-300)[0]
    return [complex(v) for v in vals[: (nz[-1] + 1 if nz.size else 1)]]


def power_series_solution(poly_coeffs, ics, z, *, max_terms=20000):
    """f(z) for the solution of f^(k) + sum A_j f^(j) = 0 with polynomial A_j.

    Works with scaled terms t_n = c_n z^n, so no coefficient underflows:
    (n+k)!/n! t_{n+k} = -sum_{j,i} a_{j,i} (n-i+j)!/(n-i)! t_{n-i+j} z^{k+i-j}.
    Returns (log|f(z)|, condition) where condition = sum|t_n| / |sum t_n|
    measures the cancellation; the value is only trustworthy when
    condition * 1e-16 is small.
    """
    k = len(poly_coeffs)
    z = complex(z)
    t = [complex(v) * z ** n / math.factorial(n) for n, v in enumerate(ics)]
    pairs = [(j, i, a) for j, cs in enumerate(poly_coeffs) for i, a in enumerate(cs) if a != 0]
    total = sum(t)
    absum = sum(abs(x) for x in t)
    small = 0
    n = 0
    while len(t) < max_terms:
        acc = 0j
        for j, i, a in pairs:
            m = n - i + j
            if m < 0 or n - i < 0:
                continue
            ff = 1.0
            for l in range(1, j + 1):
                ff *= (n - i + l)
            acc += a * ff * t[m] * z ** (k + i - j)
        lead = 1.0
        for l in range(1, k + 1):
            lead *= (n + l)
        nxt = -acc / lead
        t.append(nxt)
        total += nxt
        absum += abs(nxt)
        n += 1
        mag = max(abs(x) for x in t[-k:])
        if mag <= 1e-18 * max(abs(total), 1e-300) and n > 2 * abs(z) ** 2 / max(k, 1):
            small += 1
            if small >= 2 * k + 4:
                break
        else:
            small = 0
        if not math.isfinite(abs(total)):
            raise OverflowError("power series terms overflow; use a smaller radius")
    if total == 0:
        return -math.inf, math.inf
    return math.log(abs(total)), absum / abs(total)


def gauss_legendre_disc_integral(fun_log_abs, r, power, n_theta=256, n_s=64, rtol=1e-8,
                                 max_theta=1 << 14):
    """int_0^{2 pi} int_0^r |g(s e^{i t})|^power ds dt.

    Nested rule: Gauss-Legendre in s, periodic trapezoid in t with doubling.
    """
    x, w = np.polynomial.legendre.leggauss(n_s)
    s = 0.5 * r * (x + 1.0)
    ws = 0.5 * r * w

    def level(n, offset):
        th = offset + 2 * np.pi * np.arange(n) / n
        z = s[None, :] * np.exp(1j * th)[:, None]
        vals = np.exp(power * fun_log_abs(z.ravel()).reshape(z.shape))
        return np.sum(vals @ ws)

    n = n_theta
    total = level(n, 0.0)
    est = 2 * np.pi * total / n
    while n < max_theta:
        total += level(n, np.pi / n)
        n *= 2
        new = 2 * np.pi * total / n
        if abs(new - est) <= rtol * abs(new):
            return float(new)
        est = new
    raise RuntimeError("disc quadrature did not converge")
