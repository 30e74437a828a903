"""Wronskians of traced bases, coefficient recovery and the Abel identity check."""
from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from ..functions import ScaledComplex
from .integrate import IntegrationError, SolutionHandle

DEGENERATE_RTOL = 1e-10


class DegenerateWronskian(ValueError):
    pass


def _locate(handles, z):
    """(trace index, sample index) of z on the shared fan; (None, None) for z0."""
    h0 = handles[0]
    w = complex(z) - h0.z0
    if abs(w) <= 1e-14:
        return None, None
    r, theta = abs(w), math.atan2(w.imag, w.real)
    for ti, t in enumerate(h0.traces):
        if abs(np.angle(np.exp(1j * (t.theta - theta)))) > 1e-9:
            continue
        i = int(np.argmin(np.abs(t.radii - r))) if len(t.radii) else -1
        if i >= 0 and abs(t.radii[i] - r) <= 1e-9 * max(1.0, r):
            return ti, i
        raise IntegrationError(f"|z - z0| = {r:g} is not a traced sample radius")
    raise IntegrationError(f"direction {theta:g} is not in the fan")


def _jet_matrix(handles, z):
    """Mantissa matrix J[j, i] = f_i^(j) / exp(s_i) and the column log-scales s_i."""
    ti, si = _locate(handles, z)
    k = len(handles)
    J = np.empty((k, k), np.complex128)
    s = np.empty(k)
    for i, h in enumerate(handles):
        if ti is None:
            vals = h.ics
            top = max((v.log_scale for v in vals if v.mantissa != 0), default=0.0)
            J[:, i] = [v.mantissa * math.exp(v.log_scale - top) if v.mantissa != 0 else 0
                       for v in vals]
            s[i] = top
        else:
            t = h.traces[ti]
            J[:, i] = t.mantissa[si]
            s[i] = t.log_scale[si]
    return J, s


def _det(J, s):
    d = complex(np.linalg.det(J))
    scale = float(np.prod(np.linalg.norm(J, axis=0)))
    if abs(d) <= DEGENERATE_RTOL * scale:
        raise DegenerateWronskian(f"|W| = {abs(d):.3g} below {DEGENERATE_RTOL:g} of the "
                                  f"column-scale product {scale:.3g}")
    return ScaledComplex.normalized(d, float(np.sum(s)))


def wronskian_at(handles, z) -> ScaledComplex:
    """det[f_i^(j)(z)] with each solution's log-scale factored out of its column."""
    _check_basis(handles)
    if _locate(handles, z)[0] is None:
        # canonical data is the identity: exactly 1
        J, s = _jet_matrix(handles, z)
        if np.array_equal(J, np.eye(len(handles))) and not s.any():
            return ScaledComplex(1 + 0j, 0.0)
    return _det(*_jet_matrix(handles, z))


def reconstruct_coefficient(handles, s: int, z) -> ScaledComplex:
    """A_{k-s}(z) = -W_{k-s} / W.

    W_{k-s} is W with row k-s replaced by the k-th derivatives, which are
    taken from the equation itself applied to the traced lower derivatives.
    """
    _check_basis(handles)
    k = len(handles)
    if not 1 <= s <= k:
        raise ValueError(f"s must lie in 1..{k}")
    J, sc = _jet_matrix(handles, z)
    W = _det(J, sc)
    A = handles[0].ode.coefficient_values(np.array([complex(z)]))[0]
    top = -(A @ J)  # row of k-th derivatives, same column scaling
    Jm = J.copy()
    Jm[k - s] = top
    Wm = complex(np.linalg.det(Jm))
    num = ScaledComplex.normalized(-Wm, float(np.sum(sc))) if Wm != 0 else ScaledComplex.zero()
    return num / W


def _check_basis(handles):
    if not handles:
        raise ValueError("empty basis")
    k = handles[0].ode.k
    if len(handles) != k:
        raise ValueError(f"a basis of an order-{k} equation has {k} members, got {len(handles)}")
    if not all(isinstance(h, SolutionHandle) for h in handles):
        raise TypeError("handles must be SolutionHandle objects")


def abel_discrepancy(handles, trace_index=0):
    """Largest relative gap between log|W(r)| - log|W(z0)| and -Re int A_{k-1} dz on one ray.

    The right side is integrated independently by adaptive quadrature of the
    coefficient along the ray.
    """
    _check_basis(handles)
    ode = handles[0].ode
    t0 = handles[0].traces[trace_index]
    dirn = np.exp(1j * t0.theta)
    z0 = handles[0].z0
    base = wronskian_at(handles, z0).log_abs()

    def re_coef(r):
        return float((ode.coefficient_values(np.array([z0 + r * dirn]))[0, -1] * dirn).real)

    worst = 0.0
    prev_r, acc = 0.0, 0.0
    for i, r in enumerate(t0.radii):
        piece, _ = quad(re_coef, prev_r, r, epsabs=1e-13, epsrel=1e-12, limit=200)
        acc += piece
        prev_r = r
        lhs = wronskian_at(handles, z0 + r * dirn).log_abs() - base
        worst = max(worst, abs(lhs + acc) / max(1.0, abs(acc)))
    return worst
