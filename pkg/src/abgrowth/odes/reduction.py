"""Order reduction by a known solution f1.

With f = f1 * integral(nu), the k-th order equation becomes one of order
k-1 in nu, with coefficients

    A1_j = sum_{m=0}^{k-j-1} C(j+1+m, m) A_{j+1+m} f1^(m) / f1,   A_k = 1.

Everything here works with normalized jets (f^(m)/f at each point), so no
value ever has to be formed at its true magnitude.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..functions import EntireFunction, derivative, entire
from .integrate import LinearODE, SolutionHandle

SOLUTION_RTOL = 1e-6
VANISH_RTOL = 1e-8


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Jet:
    """Normalized derivatives ratios[n, m] = f^(m)(z_n) / f(z_n), m = 0..order."""

    z: np.ndarray
    ratios: np.ndarray
    valid: np.ndarray


def _entire_jet(f: EntireFunction, zs, order):
    f = entire(f)
    logs = np.array([derivative(f, m).logval(zs) for m in range(order + 1)]).T
    with np.errstate(over="ignore", invalid="ignore"):
        ratios = np.exp(logs - logs[:, :1])
    ratios[:, 0] = 1.0
    valid = np.isfinite(logs[:, 0]) & np.all(np.isfinite(ratios), axis=1)
    return ratios, valid


def _handle_jet(h: SolutionHandle, order):
    """Jet along all traces of a handle, completing f^(k) from the equation."""
    k = h.ode.k
    if order > k:
        raise ReductionError(f"a traced solution carries derivatives up to order {k}")
    zs, rows = [], []
    for t in h.traces:
        z = h.z0 + t.radii * np.exp(1j * t.theta)
        Y = t.mantissa
        A = h.ode.coefficient_values(z)
        top = -np.sum(A * Y, axis=1)
        zs.append(z)
        rows.append(np.column_stack([Y, top]))
    z = np.concatenate(zs) if zs else np.zeros(0, complex)
    full = np.concatenate(rows) if rows else np.zeros((0, k + 1), complex)
    mag = np.max(np.abs(full), axis=1)
    valid = np.abs(full[:, 0]) > VANISH_RTOL * mag
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = full / np.where(valid, full[:, 0], 1.0)[:, None]
    return z, ratios[:, :order + 1], valid


def jet(f, order, zs=None) -> Jet:
    """Normalized jet of f (EntireFunction, SolutionHandle or callable) at points.

    A callable takes (zs, order) and returns an array (len(zs), order+1) of
    derivative values.  Handles supply their own traced points.
    """
    if isinstance(f, SolutionHandle):
        z, ratios, valid = _handle_jet(f, order)
        if zs is not None:
            raise ReductionError("a traced solution is only known at its own sample points")
        return Jet(z, ratios, valid)
    if zs is None:
        raise ReductionError("evaluation points are needed for this solution")
    zs = np.asarray(zs, dtype=complex)
    if callable(f) and not isinstance(f, (EntireFunction, str)):
        vals = np.asarray(f(zs, order), dtype=complex)
        mag = np.max(np.abs(vals), axis=1)
        valid = np.abs(vals[:, 0]) > VANISH_RTOL * mag
        with np.errstate(divide="ignore", invalid="ignore"):
            ratios = vals / np.where(valid, vals[:, 0], 1.0)[:, None]
        return Jet(zs, ratios, valid)
    ratios, valid = _entire_jet(f, zs, order)
    mag = np.max(np.abs(ratios), axis=1)
    valid &= 1.0 > VANISH_RTOL * mag
    return Jet(zs, ratios, valid)


@dataclass(frozen=True)
class ReducedODE:
    """Order-(k-1) equation whose coefficients are evaluated pointwise.

    ``coefficient_values(zs)`` returns (len(zs), k-1); points where f1
    vanishes come back as nan and are listed by ``excluded(zs)``.
    """

    parent: object
    f1: object
    k: int

    def _parent_values(self, zs):
        return self.parent.coefficient_values(zs)

    def _f1_jet(self, zs):
        if isinstance(self.f1, SolutionHandle):
            j = jet(self.f1, self.k)
            idx = [int(np.argmin(np.abs(j.z - z))) for z in zs]
            if any(abs(j.z[i] - z) > 1e-9 * max(1.0, abs(z)) for i, z in zip(idx, zs)):
                raise ReductionError("reduced coefficients of a traced f1 exist only on its trace")
            return j.ratios[idx], j.valid[idx]
        j = jet(self.f1, self.k, zs)
        return j.ratios, j.valid

    def coefficient_values(self, zs):
        zs = np.atleast_1d(np.asarray(zs, dtype=complex))
        kp = self.k + 1  # parent order
        A = np.column_stack([self._parent_values(zs), np.ones(len(zs), complex)])  # A_k = 1
        ratios, valid = self._f1_jet(zs)
        out = np.zeros((len(zs), self.k), complex)
        for j in range(self.k):
            for m in range(kp - j):
                out[:, j] += math.comb(j + 1 + m, m) * A[:, j + 1 + m] * ratios[:, m]
        out[~valid] = np.nan
        return out

    def excluded(self, zs):
        return np.isnan(self.coefficient_values(zs)).any(axis=1)


def _solution_residual(ode, f1, zs):
    """Relative residual of f1 in the parent equation at points zs."""
    k = ode.k
    j = jet(f1, k, zs if not isinstance(f1, SolutionHandle) else None)
    A = ode.coefficient_values(j.z)
    terms = np.column_stack([A * j.ratios[:, :k], j.ratios[:, k]])
    scale = np.max(np.abs(terms), axis=1)
    res = np.abs(terms.sum(axis=1)) / np.where(scale > 0, scale, 1.0)
    return float(np.max(res[j.valid])) if j.valid.any() else 0.0


def default_points(n=100, radius=3.0):
    """Deterministic points spread over the disc (a spiral), avoiding the origin."""
    t = np.arange(1, n + 1)
    return radius * np.sqrt(t / n) * np.exp(2.399963229728653j * t)


def reduce_order(ode, f1, *, check_points=None) -> ReducedODE:
    """Reduce ``ode`` by the solution f1 (EntireFunction, SolutionHandle or jet callable).

    An entire or callable f1 is first checked to solve the equation to 1e-6
    relative at ``check_points`` (traced handles are solutions by construction).
    """
    if not isinstance(ode, ReducedODE):
        ode = LinearODE.from_spec(ode)
    if ode.k < 1:
        raise ReductionError("nothing to reduce")
    if isinstance(f1, str):
        f1 = entire(f1)
    if not isinstance(f1, SolutionHandle):
        pts = default_points() if check_points is None else np.asarray(check_points, complex)
        res = _solution_residual(ode, f1, pts)
        if res > SOLUTION_RTOL:
            raise ReductionError(f"f1 does not solve the equation (relative residual {res:.3g})")
    return ReducedODE(ode, f1, ode.k - 1)


def quotient_jet(fj: Jet, f1: Jet, order):
    """Jet of q = f_j / f1 normalized by q, from the Leibniz rule."""
    a, b = f1.ratios, fj.ratios
    d = np.zeros((len(a), order + 1), complex)
    d[:, 0] = 1.0
    for n in range(1, order + 1):
        acc = b[:, n].copy()
        for i in range(1, n + 1):
            acc -= math.comb(n, i) * a[:, i] * d[:, n - i]
        d[:, n] = acc
    return d


def reduction_residual(reduced: ReducedODE, ode, f1, fj=None, *, nu=None, points=None):
    """Max relative residual of nu = (f_j / f1)' in the reduced equation.

    Either ``fj`` (a solution of ``ode``) or ``nu`` directly (negative
    controls) must be given.  The residual at each point is |L(nu)| divided
    by the largest single term; points where f1 vanishes are skipped.
    """
    k = reduced.k
    if isinstance(f1, str):
        f1 = entire(f1)
    if nu is not None:
        if isinstance(nu, str):
            nu = entire(nu)
        zs = default_points() if points is None else np.asarray(points, complex)
        if isinstance(f1, SolutionHandle):
            zs = jet(f1, 0).z
        jn = jet(nu, k, zs)
        terms_base, valid = jn.ratios, jn.valid
    else:
        if isinstance(fj, str):
            fj = entire(fj)
        if isinstance(fj, SolutionHandle) or isinstance(f1, SolutionHandle):
            j1 = jet(f1, k + 1) if isinstance(f1, SolutionHandle) else None
            jj = jet(fj, k + 1) if isinstance(fj, SolutionHandle) else None
            zs = (j1 or jj).z
            j1 = j1 or jet(f1, k + 1, zs)
            jj = jj or jet(fj, k + 1, zs)
        else:
            zs = default_points() if points is None else np.asarray(points, complex)
            j1, jj = jet(f1, k + 1, zs), jet(fj, k + 1, zs)
        d = quotient_jet(jj, j1, k + 1)
        terms_base = d[:, 1:]  # nu^(l) / q
        valid = j1.valid & jj.valid
    A = reduced.coefficient_values(zs)
    valid &= ~np.isnan(A).any(axis=1)
    terms = np.column_stack([A * terms_base[:, :k], terms_base[:, k]])
    scale = np.max(np.abs(terms), axis=1)
    res = np.abs(terms.sum(axis=1)) / np.where(scale > 0, scale, 1.0)
    res = res[valid]  # all-zero terms satisfy the equation exactly
    if res.size == 0:
        raise ReductionError("no admissible evaluation point")
    return float(np.max(res))
