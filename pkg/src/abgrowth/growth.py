"""Finite-radius estimates of generalized order and type.

A lim sup cannot be computed from finitely many radii, so every estimate
carries two numbers: the maximum of the defining ratio over the tail of the
grid, and a least-squares slope of numerator against denominator over the
same tail.  The slope cancels additive constants and converges much faster
when growth is a clean power law in the transformed coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .functions import EntireFunction, MeromorphicFunction, counting_N, log_max_modulus, proximity_m
from .scales import ScaleTriple

T_BASED, M_BASED = "T_based", "M_based"
MAX_TAIL_EXCLUDED = 0.25
MIN_TAIL = 8


class EstimatorError(ValueError):
    pass


@dataclass(frozen=True)
class RadialGrid:
    r0: float = 4.0
    q: float = 1.15
    count: int = 40
    window_fraction: float = 0.5

    def __post_init__(self):
        if not self.r0 > 1:
            raise ValueError(f"r0 must exceed 1, got {self.r0}")
        if not self.q > 1:
            raise ValueError(f"ratio q must exceed 1, got {self.q}")
        if self.count < 16:
            raise ValueError(f"grid needs at least 16 radii, got {self.count}")
        if not 0 < self.window_fraction <= 1:
            raise ValueError("window_fraction must lie in (0, 1]")
        if not np.all(np.isfinite(self.radii)):
            raise ValueError("grid radii overflow")

    @property
    def radii(self):
        return self.r0 * self.q ** np.arange(self.count)

    @property
    def r_max(self):
        return float(self.radii[-1])

    @classmethod
    def spanning(cls, r0, r_max, count=40, window_fraction=0.5):
        """Geometric grid with ``count`` radii from r0 to r_max inclusive."""
        q = (r_max / r0) ** (1.0 / (count - 1))
        return cls(r0, q, count, window_fraction)

    def describe(self):
        return {"r0": self.r0, "q": self.q, "count": self.count,
                "window_fraction": self.window_fraction, "r_max": self.r_max}


@dataclass
class IndicatorEstimate:
    kind: str
    value_tail_sup: float
    value_slope: float
    window: tuple
    monotone_trend: bool
    samples: list
    residual: float = 0.0
    mode: str = T_BASED
    excluded: list = field(default_factory=list)
    columns: tuple = ("r", "log_M", "T", "numerator", "denominator", "ratio")

    def as_dict(self):
        return {
            "kind": self.kind, "mode": self.mode, "value_tail_sup": self.value_tail_sup,
            "value_slope": self.value_slope, "window": list(self.window),
            "monotone_trend": self.monotone_trend, "residual": self.residual,
            "excluded": list(self.excluded),
        }


def tail_sup(values, window_fraction):
    """Maximum over the trailing ``window_fraction`` of the values."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("tail_sup of an empty sequence")
    n = max(1, math.ceil(window_fraction * len(v) - 1e-9))
    return float(np.max(v[-n:]))


def slope_fit(points, window=None):
    """OLS slope of y on x, and the RMS residual.

    ``window`` optionally restricts to x in [lo, hi].
    """
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    if window is not None:
        keep = (x >= window[0]) & (x <= window[1])
        x, y = x[keep], y[keep]
    if len(x) < MIN_TAIL:
        raise EstimatorError(f"slope fit needs at least {MIN_TAIL} points, got {len(x)}")
    xm = x.mean()
    dx = x - xm
    sxx = float(np.dot(dx, dx))
    if sxx <= 1e-24 * max(1.0, float(np.dot(x, x))):
        raise EstimatorError("degenerate x-range in slope fit")
    slope = float(np.dot(dx, y - y.mean()) / sxx)
    resid = y - (y.mean() + slope * dx)
    return slope, float(np.sqrt(np.mean(resid ** 2)))


def _profile(f, radii, mode):
    """log M and/or T at each radius, as arrays (nan where not computed)."""
    radii = np.asarray(radii, dtype=float)
    log_M = np.full(len(radii), np.nan)
    T = np.full(len(radii), np.nan)
    if hasattr(f, "log_M_profile"):  # solutions of ODEs
        if mode == M_BASED:
            log_M = np.asarray(f.log_M_profile(radii), dtype=float)
        else:
            T = np.asarray(f.T_profile(radii), dtype=float)
        return log_M, T
    if not isinstance(f, (EntireFunction, MeromorphicFunction)):
        raise TypeError(f"cannot estimate growth of {type(f).__name__}")
    with np.errstate(over="ignore", invalid="ignore"):
        for i, r in enumerate(radii):
            if mode == M_BASED:
                if not isinstance(f, EntireFunction):
                    raise EstimatorError("M-based estimates need an entire function")
                log_M[i] = log_max_modulus(f, r)
            else:
                T[i] = proximity_m(f, r) + counting_N(f, r)
    return log_M, T


def _numerator(alpha, log_M, T, mode, shifted):
    """alpha applied to the iterated log of T or M; nan where a log is undefined.

    Chains: T-based log T (shifted: log^[2] T); M-based log^[2] M (shifted:
    log^[3] M).  Since log_M is already log M, M-based needs one log fewer.
    """
    if mode == T_BASED:
        v = T.copy()
        depth = 2 if shifted else 1
    elif mode == M_BASED:
        v = log_M.copy()
        depth = 2 if shifted else 1
    else:
        raise ValueError(f"unknown mode {mode!r}")
    ok = np.isfinite(v)
    for _ in range(depth):
        ok &= v > 0
        with np.errstate(divide="ignore", invalid="ignore"):
            v = np.where(ok, np.log(np.where(ok, v, 1.0)), np.nan)
    ok &= v > 0  # alpha's argument must be a genuine positive value
    out = np.full(v.shape, np.nan)
    if ok.any():
        out[ok] = alpha(v[ok])
    return out


def _denominator(triple, radii):
    return triple.beta(np.log(triple.gamma(np.asarray(radii, dtype=float))))


def _tail_indices(n, fraction):
    k = max(1, math.ceil(fraction * n - 1e-9))
    return np.arange(n - k, n)


def _select_tail(grid, num, den):
    radii = grid.radii
    idx = _tail_indices(len(radii), grid.window_fraction)
    valid = np.isfinite(num[idx]) & np.isfinite(den[idx]) & (den[idx] > 0)
    excluded = [float(r) for r in radii[idx][~valid]]
    if len(excluded) > MAX_TAIL_EXCLUDED * len(idx):
        raise EstimatorError(f"{len(excluded)} of {len(idx)} tail radii excluded "
                             f"(budget {MAX_TAIL_EXCLUDED:.0%}): {excluded[:5]}")
    use = idx[valid]
    if len(use) < MIN_TAIL:
        raise EstimatorError(f"only {len(use)} valid tail radii (need {MIN_TAIL})")
    return use, excluded


def _samples(radii, log_M, T, num, den, ratio):
    return [tuple(float(v) for v in row) for row in zip(radii, log_M, T, num, den, ratio)]


def _monotone(v):
    d = np.diff(v)
    return bool(np.all(d >= -1e-12) or np.all(d <= 1e-12))


def estimate_order(f, triple: ScaleTriple, grid: RadialGrid | None = None, mode=T_BASED,
                   shifted=False, *, profile=None):
    """Order estimate: tail-sup of alpha(...)/beta(log gamma r) and the matching slope."""
    grid = grid or RadialGrid()
    radii = grid.radii
    log_M, T = profile if profile is not None else _profile(f, radii, mode)
    num = _numerator(triple.alpha, log_M, T, mode, shifted)
    den = _denominator(triple, radii)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = num / den
    use, excluded = _select_tail(grid, num, den)
    slope, resid = slope_fit(np.column_stack([den[use], num[use]]))
    kind = "order_log_shifted" if shifted else "order"
    return IndicatorEstimate(kind, float(np.max(ratio[use])), slope,
                             (float(radii[use[0]]), float(radii[use[-1]])), _monotone(ratio[use]),
                             _samples(radii, log_M, T, num, den, ratio), resid, mode, excluded)


def estimate_type(f, triple: ScaleTriple, sigma, grid: RadialGrid | None = None, mode=T_BASED,
                  shifted=False, *, profile=None):
    """Type estimate at order sigma.

    Tail-sup of exp(alpha(...)) / exp(beta(log gamma r))^sigma, computed in
    log space; the slope variant fixes the slope at sigma and reports
    exp(mean intercept).
    """
    if not (math.isfinite(sigma) and sigma > 0):
        raise EstimatorError(f"type needs a finite positive order, got {sigma}")
    grid = grid or RadialGrid()
    radii = grid.radii
    log_M, T = profile if profile is not None else _profile(f, radii, mode)
    num = _numerator(triple.alpha, log_M, T, mode, shifted)
    den = _denominator(triple, radii)
    log_ratio = num - sigma * den
    with np.errstate(over="ignore", invalid="ignore"):
        ratio = np.exp(log_ratio)
    use, excluded = _select_tail(grid, num, den)
    intercept = float(np.mean(log_ratio[use]))
    resid = float(np.sqrt(np.mean((log_ratio[use] - intercept) ** 2)))
    if shifted:
        kind = "type_log_shifted"
    else:
        kind = "type_M" if mode == M_BASED else "type"
    return IndicatorEstimate(kind, float(np.max(ratio[use])), math.exp(intercept),
                             (float(radii[use[0]]), float(radii[use[-1]])), _monotone(ratio[use]),
                             _samples(radii, log_M, T, num, den, ratio), resid, mode, excluded)


def growth_profile(f, grid: RadialGrid, mode):
    """Precompute (log_M, T) so several estimates can share one evaluation."""
    return _profile(f, grid.radii, mode)
