"""Cauchy-type bound on polynomial zeros, checked against computed roots."""
from __future__ import annotations

import numpy as np

MAX_DEGREE = 32


class RootFindingError(RuntimeError):
    pass


def _trim(coeffs):
    a = np.asarray(coeffs, dtype=complex)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("coefficients a_0..a_n expected")
    nz = np.nonzero(a)[0]
    if nz.size == 0:
        raise ValueError("the zero polynomial has no zero bound")
    return a[:nz[-1] + 1]


def polynomial_zero_bound(coeffs) -> float:
    """1 + max_{k<n} |a_k / a_n| for coefficients a_0..a_n (a_n != 0)."""
    a = np.asarray(coeffs, dtype=complex)
    if a[-1] == 0:
        raise ValueError("leading coefficient a_n must be nonzero")
    if a.size == 1:
        return 1.0
    return float(1.0 + np.max(np.abs(a[:-1] / a[-1])))


def find_roots(coeffs, *, tol=1e-14, max_iter=500):
    """All roots by Aberth-Ehrlich simultaneous iteration (coefficients a_0..a_n)."""
    a = _trim(coeffs)
    n = a.size - 1
    if n == 0:
        return np.zeros(0, complex)
    if n > MAX_DEGREE:
        raise RootFindingError(f"degree {n} above the cap {MAX_DEGREE}")
    hi = a[::-1] / a[-1]  # monic, highest degree first
    dhi = hi[:-1] * np.arange(n, 0, -1)
    # starting points on a circle inside the Cauchy bound, rotated off symmetry axes
    R = polynomial_zero_bound(a)
    z = 0.5 * R * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    absc = np.abs(hi)
    eps = np.finfo(float).eps
    done = np.zeros(n, bool)
    for _ in range(max_iter):
        p = np.polyval(hi, z)
        dp = np.polyval(dhi, z)
        # a root is settled when its step is tiny or |p| is at rounding level
        done |= np.abs(p) <= 16 * eps * np.polyval(absc, np.abs(z))
        if done.all():
            return z
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            w = ratio / (1.0 - ratio * inv.sum(axis=1))
        w = np.where(done, 0.0, w)
        if not np.all(np.isfinite(w)):
            z = z + 1e-8 * R * np.exp(1j * np.arange(n))  # perturb off a collision
            continue
        z = z - w
        done |= np.abs(w) <= tol * np.maximum(1.0, np.abs(z))
    raise RootFindingError(f"root iteration did not converge in {max_iter} sweeps")


def verify_roots_within(coeffs, slack=1e-9) -> bool:
    """True iff every computed root has modulus <= bound + slack."""
    a = _trim(coeffs)
    roots = find_roots(a)
    return bool(np.all(np.abs(roots) <= polynomial_zero_bound(a) + slack))
