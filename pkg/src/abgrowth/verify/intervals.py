"""Sets of intervals in (1, inf) and their logarithmic measure.

Endpoints are kept as (log a, log(b/a)) so that intervals like
[exp(j^2), (1 + 1/j) exp(j^2)] stay exact far beyond float range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class IntervalSet:
    log_lo: np.ndarray = field(default_factory=lambda: np.zeros(0))
    log_width: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        lo = np.asarray(self.log_lo, dtype=float).ravel()
        w = np.asarray(self.log_width, dtype=float).ravel()
        if lo.shape != w.shape:
            raise ValueError("endpoint arrays differ in length")
        # a_i >= 1: the point 1 itself carries no measure
        bad = (lo < 0) | (w < 0) | ~np.isfinite(lo + w)
        if bad.any():
            raise ValueError(f"interval {int(np.argmax(bad))} is not inside (1, inf)")
        clash = lo[1:] <= lo[:-1] + w[:-1]
        if clash.any():
            i = int(np.argmax(clash))
            raise ValueError(f"intervals {i} and {i + 1} overlap or are unsorted")
        object.__setattr__(self, "log_lo", lo)
        object.__setattr__(self, "log_width", w)

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        lo = [math.log(a) for a, b in pairs]
        w = [math.log(b / a) for a, b in pairs]
        return cls(np.array(lo), np.array(w))

    def __len__(self):
        return len(self.log_lo)

    def log_measure(self):
        """Integral of dr/r over the set, summed exactly rounded."""
        return math.fsum(self.log_width)

    def intervals(self):
        return [(math.exp(l), math.exp(l + w)) for l, w in zip(self.log_lo, self.log_width)]

    def contains(self, r):
        if r <= 0:
            return False
        x = math.log(r)
        i = int(np.searchsorted(self.log_lo, x, side="right")) - 1
        return i >= 0 and x <= self.log_lo[i] + self.log_width[i]


def default_log_R(js):
    """log R_j for the policy R_j = exp(j^2)."""
    js = np.asarray(js, dtype=float)
    return js * js


def geometric_intervals(j3, N, log_R=default_log_R):
    """IntervalSet of [R_j, (1 + 1/j) R_j] for j = j3..N, spacing checked."""
    if j3 < 1 or N < j3 - 1:
        raise ValueError("need 1 <= j3 and N >= j3 - 1")
    js = np.arange(j3, N + 1)
    lo = np.asarray(log_R(js), dtype=float)
    w = np.log1p(1.0 / js)
    clash = lo[1:] <= lo[:-1] + w[:-1]
    if clash.any():
        j = int(js[int(np.argmax(clash))])
        raise ValueError(f"spacing condition R_{j + 1} > (1 + 1/{j}) R_{j} violated")
    return IntervalSet(lo, w)
