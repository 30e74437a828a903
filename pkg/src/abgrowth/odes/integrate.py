"""Ray integration of linear ODEs f^(k) + A_{k-1} f^(k-1) + ... + A_0 f = 0.

Along z = z0 + r e^{i theta} the companion system is integrated in r by the
compiled Dormand-Prince kernels.  Each solution column is kept as a complex
mantissa vector times exp(log_scale); the kernels renormalize a column when
its largest squared component leaves [1, e^2), so magnitudes like
exp(exp(r)) stay representable.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..functions import EntireFunction, ScaledComplex, entire
from . import kernel as kn
from ._kernels import KERNELS
from .compile import compile_coefficients

TOL_RANGE = (1e-12, 1e-6)
DEFAULT_BUDGET = 10 ** 7
DEFAULT_FAN = 64


class IntegrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearODE:
    """Coefficients A_0..A_{k-1} (lowest derivative first); the leading one is 1."""

    coefficients: tuple
    label: str = ""

    def __post_init__(self):
        cs = tuple(entire(c) for c in self.coefficients)
        if not cs:
            raise ValueError("an ODE needs order k >= 1")
        object.__setattr__(self, "coefficients", cs)

    @property
    def k(self):
        return len(self.coefficients)

    @classmethod
    def from_spec(cls, spec):
        """From a list of coefficient expressions, or a string 'A0; A1; ...'."""
        if isinstance(spec, LinearODE):
            return spec
        if isinstance(spec, str):
            spec = [s.strip() for s in spec.split(";")]
        return cls(tuple(spec))

    @cached_property
    def compiled(self):
        return compile_coefficients(self.coefficients)

    def coefficient_values(self, zs):
        """Array (len(zs), k) of A_j(z)."""
        return self.compiled.values(self.k, zs)

    def __str__(self):
        if self.label:
            return self.label
        parts = [f"f^({self.k})"]
        for j in range(self.k - 1, -1, -1):
            c = self.coefficients[j]
            if c.is_polynomial and all(x == 0 for x in c.node.coeffs):
                continue
            parts.append(f"({c})*f^({j})")
        return " + ".join(parts) + " = 0"


@dataclass
class RayTrace:
    """Samples of one solution along one ray.

    ``mantissa[i, j] * exp(log_scale[i])`` is f^(j) at radius ``radii[i]``.
    """

    theta: float
    radii: np.ndarray
    mantissa: np.ndarray
    log_scale: np.ndarray
    renorm_count: int
    terminated_reason: str
    steps: int = 0
    r_reached: float = 0.0

    @property
    def log_abs(self):
        """log|f^(j)| per sample, shape (n, k); -inf only where a value is exactly 0."""
        with np.errstate(divide="ignore"):
            return self.log_scale[:, None] + np.log(np.abs(self.mantissa))

    @property
    def phases(self):
        return np.angle(self.mantissa)

    @property
    def completed(self):
        return self.terminated_reason == "completed"

    @property
    def samples(self):
        la, ph = self.log_abs, self.phases
        return [(float(r), *map(float, la[i]), *map(float, ph[i])) for i, r in enumerate(self.radii)]

    def value(self, i, j=0):
        return ScaledComplex.normalized(complex(self.mantissa[i, j]), float(self.log_scale[i]))


@dataclass
class SolutionHandle:
    ode: LinearODE
    ics: tuple
    traces: list
    z0: complex = 0j
    index: int = 0
    excluded: list = field(default_factory=list)
    label: str = ""

    @property
    def thetas(self):
        return np.array([t.theta for t in self.traces])

    def log_M_profile(self, radii, *, rays="completed"):
        """Running max over rays of log|f| at the given radii.

        The estimators use completed rays only; if none completed the active
        rays are used instead.
        """
        vals = np.array([solution_log_M(self, r, rays=rays, strict=False) for r in radii])
        if rays == "completed" and np.all(np.isnan(vals)):
            vals = np.array([solution_log_M(self, r, rays="active", strict=False) for r in radii])
        return np.fmax.accumulate(vals)

    def T_profile(self, radii):
        """T(r) = m(r) from the fan, which must be a complete equispaced circle."""
        if self.excluded:
            raise IntegrationError("T from the fan needs an unexcluded full circle of rays")
        out = []
        for r in radii:
            vals = [_log_abs_at(t, r) for t in self.traces]
            if any(v is None for v in vals):
                raise IntegrationError(f"not every ray reaches r={r:g}")
            out.append(float(np.mean(np.maximum(vals, 0.0))))
        return np.array(out)


def _check_tol(tol):
    if not (TOL_RANGE[0] <= tol <= TOL_RANGE[1]):
        raise ValueError(f"tol must lie in [{TOL_RANGE[0]:g}, {TOL_RANGE[1]:g}], got {tol:g}")


def _initial_columns(ics, k):
    """ics: k values per column (complex or ScaledComplex) -> (Y0 (k,p), S0 (p,))."""
    cols = ics if isinstance(ics[0], (list, tuple, np.ndarray)) else [ics]
    p = len(cols)
    Y0 = np.zeros((k, p), np.complex128)
    S0 = np.zeros(p)
    for c, col in enumerate(cols):
        if len(col) != k:
            raise ValueError(f"need {k} initial values, got {len(col)}")
        vals = [v if isinstance(v, ScaledComplex) else ScaledComplex.from_complex(complex(v))
                for v in col]
        if not all(math.isfinite(v.log_scale) or v.mantissa == 0 for v in vals) or \
                not all(np.isfinite(v.mantissa) for v in vals):
            raise ValueError("initial conditions must be finite")
        top = max((v.log_scale for v in vals if v.mantissa != 0), default=0.0)
        for j, v in enumerate(vals):
            if v.mantissa != 0:
                Y0[j, c] = v.mantissa * math.exp(v.log_scale - top)
        S0[c] = top
    return Y0, S0


def default_radii(r_max, n=64):
    return np.linspace(0.0, r_max, n + 1)[1:]


def _run(ode, Y0, S0, z0, theta, radii, tol, budget, h0=1e-3):
    k, p = Y0.shape
    cc = ode.compiled
    outY = np.zeros((len(radii), k, p), np.complex128)
    outS = np.zeros((len(radii), p))
    ren = np.zeros(p, np.int64)
    dirn = complex(np.exp(1j * theta))
    kern = KERNELS.get((k, p, cc.form))
    if kern is not None:
        r, steps, status, ns = kern(*cc.args(), Y0, S0, complex(z0), dirn, radii, tol, budget,
                                    h0, outY, outS, ren)
    else:
        r, steps, status, ns = kn.dp45_generic(cc.cmode, *cc.args(), Y0, S0, complex(z0), dirn,
                                               radii, tol, budget, h0, outY, outS, ren)
    return outY[:ns], outS[:ns], ren, float(r), int(steps), kn.STATUS_NAMES[status]


def _prepare(radii, r_max):
    radii = default_radii(r_max) if radii is None else np.asarray(radii, dtype=float)
    radii = radii[radii > 0]
    if radii.size == 0 or np.any(np.diff(radii) <= 0):
        raise ValueError("sample radii must be positive and strictly increasing")
    return np.ascontiguousarray(radii)


def integrate_ray(ode: LinearODE, ics, theta: float, r_max: float, tol: float = 1e-10,
                  step_budget: int = DEFAULT_BUDGET, *, radii=None, z0=0j) -> RayTrace:
    """Integrate one solution along z0 + r e^{i theta} up to r_max.

    ``radii`` are the sample points (default 64 equispaced up to r_max); the
    step controller lands exactly on each one.
    """
    _check_tol(tol)
    ode = LinearODE.from_spec(ode)
    radii = _prepare(radii, r_max)
    Y0, S0 = _initial_columns(list(ics), ode.k)
    Y, S, ren, r, steps, reason = _run(ode, Y0, S0, z0, theta, radii, tol, step_budget)
    return RayTrace(float(theta), radii[:len(Y)], Y[:, :, 0].copy(), S[:, 0].copy(),
                    int(ren[0]), reason, steps, r)


def fan_angles(n=DEFAULT_FAN, exclude=None):
    """Equispaced angles 2 pi j / n; ``exclude`` is (center, half_width) or a list of them.

    Returns (kept angles, excluded angles).
    """
    th = 2 * np.pi * np.arange(n) / n
    sectors = [] if exclude is None else ([exclude] if np.ndim(exclude[0]) == 0 else list(exclude))
    drop = np.zeros(n, bool)
    for center, half in sectors:
        d = np.angle(np.exp(1j * (th - center)))
        drop |= np.abs(d) < half
    return th[~drop], th[drop]


def solution_basis(ode, z0=0j, fan=None, r_max=10.0, *, tol=1e-10, step_budget=DEFAULT_BUDGET,
                   radii=None, exclude=None, threads=None):
    """Canonical basis f_i^(j)(z0) = delta_ij, each handle traced over the fan.

    All k columns share each ray's integration, so every handle has the same
    rays and the same sample radii (which the Wronskian needs).
    """
    _check_tol(tol)
    ode = LinearODE.from_spec(ode)
    k = ode.k
    if fan is None:
        fan, dropped = fan_angles(DEFAULT_FAN, exclude)
    else:
        fan, dropped = np.asarray(fan, dtype=float), np.array([])
    if len(fan) == 0:
        raise ValueError("fan must contain at least one ray")
    radii = _prepare(radii, r_max)
    Y0 = np.eye(k, dtype=np.complex128)
    S0 = np.zeros(k)

    def one(theta):
        return _run(ode, Y0, S0, z0, theta, radii, tol, step_budget)

    workers = threads or os.cpu_count() or 1
    if workers > 1 and len(fan) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, fan))
    else:
        results = [one(t) for t in fan]
    handles = []
    for i in range(k):
        traces = [RayTrace(float(t), radii[:len(Y)], Y[:, :, i].copy(), S[:, i].copy(),
                           int(ren[i]), reason, steps, r)
                  for t, (Y, S, ren, r, steps, reason) in zip(fan, results)]
        ics = tuple(ScaledComplex.from_complex(1.0 if j == i else 0.0) for j in range(k))
        handles.append(SolutionHandle(ode, ics, traces, complex(z0), i,
                                      [float(t) for t in dropped], f"f_{i + 1}"))
    return handles


def _log_abs_at(trace, r, j=0):
    """log|f^(j)| at radius r on a trace: exact at samples, linear in between."""
    rr = trace.radii
    if len(rr) == 0 or r > rr[-1] * (1 + 1e-12) or r <= 0:
        return None
    la = trace.log_abs[:, j]
    i = int(np.searchsorted(rr, r))
    if i < len(rr) and abs(rr[i] - r) <= 1e-12 * max(1.0, r):
        return float(la[i])
    if i == 0:
        return None
    w = (r - rr[i - 1]) / (rr[i] - rr[i - 1])
    return float((1 - w) * la[i - 1] + w * la[i])


def solution_log_M(handle: SolutionHandle, r, *, rays="active", strict=True, with_count=False):
    """Max of log|f| at radius r over the rays that reach r.

    ``rays="completed"`` restricts to rays that finished within budget.
    Returns the value (and the number of contributing rays if asked).
    """
    vals = []
    for t in handle.traces:
        if rays == "completed" and not t.completed:
            continue
        v = _log_abs_at(t, r)
        if v is not None:
            vals.append(v)
    if not vals:
        if strict:
            raise IntegrationError(f"no ray reaches r={r:g}")
        return (math.nan, 0) if with_count else math.nan
    best = float(max(vals))
    return (best, len(vals)) if with_count else best
