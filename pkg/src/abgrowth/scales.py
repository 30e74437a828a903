"""Growth scales: the functions alpha, beta, gamma of a generalized order.

Scales are drawn from a small catalog so that inverses are exact.  Each
scale knows which of the three classes it is guaranteed to belong to:

* ``L1`` quasi-additive: a(x + y) <= a(x) + a(y) + c
* ``L2`` translation-stable: a(x + O(1)) = (1 + o(1)) a(x)
* ``L3`` subadditive: a(x + y) <= a(x) + a(y)

Class checks run on finite grids and can only report that no counterexample
was found.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

L1, L2, L3 = "L1", "L2", "L3"
CLASSES = (L1, L2, L3)

# classes each catalog family belongs to; L3 implies L1 with c = 0
_GUARANTEES = {
    "identity": frozenset({L1, L2, L3}),
    "iter_log": frozenset({L1, L2}),
    "power": frozenset({L1, L2, L3}),
    "affine": frozenset({L1, L2, L3}),
}
_STRONGEST = {"identity": L3, "iter_log": L1, "power": L3, "affine": L3}


class ScaleError(ValueError):
    """Invalid scale specification or argument outside a scale's range."""


class ScaleDomainError(ScaleError):
    """An iterated logarithm left its domain."""

    def __init__(self, depth, value):
        self.depth = depth
        self.value = value
        super().__init__(f"iterated log undefined at depth {depth} (argument {value!r} <= 0)")


def iter_log(k, x):
    """k-fold natural logarithm, with log^[0] x = x and log^[-1] x = exp x."""
    if k < -1:
        raise ScaleError(f"iteration depth must be >= -1, got {k}")
    if k == -1:
        return np.exp(x) if isinstance(x, np.ndarray) else math.exp(x)
    arr = isinstance(x, np.ndarray)
    v = np.asarray(x, dtype=float) if arr else float(x)
    for depth in range(1, k + 1):
        bad = np.any(v <= 0) if arr else v <= 0
        if bad:
            raise ScaleDomainError(depth, float(np.min(v)) if arr else v)
        v = np.log(v) if arr else math.log(v)
    return v


def iter_exp(k, x):
    """k-fold exponential, the inverse of :func:`iter_log` (exp^[-1] = log)."""
    if k < -1:
        raise ScaleError(f"iteration depth must be >= -1, got {k}")
    if k == -1:
        return iter_log(1, x)
    arr = isinstance(x, np.ndarray)
    v = np.asarray(x, dtype=float) if arr else float(x)
    with np.errstate(over="ignore"):
        for _ in range(k):
            v = np.exp(v) if arr else (math.exp(v) if v < 709.78 else math.inf)
    return v


@dataclass(frozen=True)
class ScaleFunction:
    """A catalog scale.  Below ``floor`` the scale is constant."""

    name: str
    params: tuple = ()
    floor: float = 0.0
    declared_class: str | None = None
    quasi_additive_c: float = 0.0
    R0: float = 1.0
    label: str = field(default="", compare=False)

    def __call__(self, x):
        arr = isinstance(x, np.ndarray)
        v = np.maximum(np.asarray(x, dtype=float), self.floor)
        out = self._raw(v)
        return out if arr else float(out)

    def _raw(self, v):
        if self.name == "identity":
            return v
        if self.name == "iter_log":
            (k,) = self.params
            return iter_log(int(k), v)
        if self.name == "power":
            (s,) = self.params
            return v ** s
        if self.name == "affine":
            a, b = self.params
            return a * v + b
        raise ScaleError(f"unknown scale {self.name!r}")

    @property
    def guaranteed(self):
        """Classes the catalog guarantees analytically (empty for raw scales)."""
        if self.declared_class is None:
            return frozenset()
        return _GUARANTEES.get(self.name, frozenset({self.declared_class}))

    def inverse(self, y):
        return scale_inverse(self, y)

    def __str__(self):
        return self.label or self.name


def builtin_scale(name, *params):
    """Construct a catalog scale.

    ``identity``, ``iter_log(k)`` (k >= 1), ``power(s)`` with 0 < s <= 1 and
    ``affine(a, b)`` with a > 0, b >= 0 (b defaults to 0).
    """
    name = {"id": "identity", "log": "iter_log"}.get(name, name)
    if name == "identity":
        if params:
            raise ScaleError("identity takes no parameters")
        return ScaleFunction("identity", (), 0.0, L3, 0.0, 1.0, "id")
    if name == "iter_log":
        k = int(params[0]) if params else 1
        if k < 1 or (params and k != params[0]):
            raise ScaleError(f"iter_log needs an integer depth >= 1, got {params[0]!r}")
        x0 = float(iter_exp(k, 0.0))
        label = "log" if k == 1 else f"log^[{k}]"
        probe = ScaleFunction("iter_log", (k,), x0, L1, 0.0, x0, label)
        c = quasi_additive_c(probe)
        return ScaleFunction("iter_log", (k,), x0, L1, c, x0, label)
    if name == "power":
        if len(params) != 1:
            raise ScaleError("power takes one exponent")
        s = float(params[0])
        if not 0 < s <= 1:
            raise ScaleError(f"power exponent must lie in (0, 1], got {s} (not subadditive)")
        return ScaleFunction("power", (s,), 0.0, L3, 0.0, 1.0, f"x^{s:g}")
    if name == "affine":
        if len(params) not in (1, 2):
            raise ScaleError("affine takes a slope and an optional offset")
        a = float(params[0])
        b = float(params[1]) if len(params) == 2 else 0.0
        if a <= 0 or b < 0:
            raise ScaleError(f"affine needs a > 0 and b >= 0, got a={a}, b={b}")
        return ScaleFunction("affine", (a, b), 0.0, L3, 0.0, 1.0, f"{a:g}x+{b:g}")
    raise ScaleError(f"unknown scale {name!r}")


def scale_from_spec(spec):
    """Build a scale from a config object ``{"name": ..., ...}`` or a short string.

    Strings: ``id``, ``log``, ``log2`` (double log), ``power:0.5``, ``affine:2,1``.
    """
    if isinstance(spec, ScaleFunction):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s in ("id", "identity"):
            return builtin_scale("identity")
        if s.startswith("log"):
            depth = s[3:]
            return builtin_scale("iter_log", int(depth) if depth else 1)
        if ":" in s:
            name, args = s.split(":", 1)
            try:
                vals = [float(a) for a in args.split(",")]
            except ValueError:
                raise ScaleError(f"bad scale parameters in {spec!r}") from None
            return builtin_scale(name, *vals)
        return builtin_scale(s)
    if isinstance(spec, dict):
        d = dict(spec)
        name = d.pop("name", None)
        if name is None:
            raise ScaleError(f"scale spec needs a name: {spec!r}")
        keys = {"iter_log": ("k",), "power": ("s",), "affine": ("a", "b")}.get(name, ())
        unknown = set(d) - set(keys)
        if unknown:
            raise ScaleError(f"unknown keys for scale {name!r}: {sorted(unknown)}")
        return builtin_scale(name, *[d[k] for k in keys if k in d])
    raise ScaleError(f"cannot interpret scale spec {spec!r}")


def scale_inverse(scale: ScaleFunction, y):
    """x with scale(x) = y; closed form for catalog scales, bisection otherwise."""
    y = float(y)
    lo = scale(scale.floor)
    if y < lo - 1e-15 * max(1.0, abs(lo)):
        raise ScaleError(f"{y} is below the range of {scale} (minimum {lo})")
    if scale.name == "identity":
        return max(y, scale.floor)
    if scale.name == "iter_log":
        return float(iter_exp(int(scale.params[0]), y))
    if scale.name == "power":
        return y ** (1.0 / scale.params[0])
    if scale.name == "affine":
        a, b = scale.params
        return (y - b) / a
    return bisect_inverse(scale, y)


def bisect_inverse(scale, y, hi=None, rtol=1e-12):
    """Inverse by bisection; only needs monotonicity."""
    lo = scale.floor
    hi = max(1.0, 2 * abs(lo)) if hi is None else hi
    while scale(hi) < y:
        hi *= 2.0
        if not math.isfinite(hi):
            raise ScaleError(f"{y} is beyond the range of {scale}")
    while hi - lo > rtol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if scale(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def log_inverse(scale, y):
    """log of scale_inverse(y), computed without overflow (vectorized)."""
    y = np.asarray(y, dtype=float)
    if scale.name == "iter_log":
        k = int(scale.params[0])
        return iter_exp(k - 1, y) if k > 1 else y
    if scale.name == "identity":
        return np.log(np.maximum(y, scale.floor))
    if scale.name == "power":
        return np.log(y) / scale.params[0]
    if scale.name == "affine":
        a, b = scale.params
        return np.log((y - b) / a)
    return np.log(np.vectorize(lambda v: scale_inverse(scale, v))(y))


@dataclass(frozen=True)
class ScaleTriple:
    alpha: ScaleFunction
    beta: ScaleFunction
    gamma: ScaleFunction
    p_max: int = 3

    def __str__(self):
        return f"({self.alpha},{self.beta},{self.gamma})"


def triple_from_spec(spec):
    """``"log,id,id"``, a list of three scale specs, or a dict with alpha/beta/gamma."""
    if isinstance(spec, ScaleTriple):
        return spec
    if isinstance(spec, str):
        parts = [p for p in spec.replace("(", "").replace(")", "").split(",")]
        # power/affine params also use commas, so rejoin ":"-prefixed continuations
        merged = []
        for p in parts:
            if merged and ":" in merged[-1] and _is_number(p):
                merged[-1] += "," + p
            else:
                merged.append(p.strip())
        if len(merged) != 3:
            raise ScaleError(f"triple needs three scales, got {spec!r}")
        return ScaleTriple(*[scale_from_spec(p) for p in merged])
    if isinstance(spec, (list, tuple)):
        if len(spec) != 3:
            raise ScaleError(f"triple needs three scales, got {spec!r}")
        return ScaleTriple(*[scale_from_spec(p) for p in spec])
    if isinstance(spec, dict):
        d = dict(spec)
        p_max = int(d.pop("p_max", 3))
        unknown = set(d) - {"alpha", "beta", "gamma"}
        if unknown:
            raise ScaleError(f"unknown triple keys {sorted(unknown)}")
        return ScaleTriple(scale_from_spec(d["alpha"]), scale_from_spec(d["beta"]),
                           scale_from_spec(d["gamma"]), p_max)
    raise ScaleError(f"cannot interpret triple spec {spec!r}")


def _is_number(s):
    try:
        float(s)
        return True
    except ValueError:
        return False


@dataclass
class ClassReport:
    scale: str
    tested: str
    grid: str
    worst_violation: float
    witness: tuple
    verdict: str
    tolerance: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"


def class_grid(R0=1.0, top=1e8, per_decade=512):
    """Default class-check grid: geometric, ``per_decade`` points per decade."""
    n = max(2, int(round(per_decade * math.log10(top / R0)))) + 1
    return np.geomspace(R0, top, n)


def _pair_excess(scale, grid, chunk=1 << 22):
    """max over pairs a <= b of scale(a+b) - scale(a) - scale(b), with the witness."""
    g = np.asarray(grid, dtype=float)
    vals = scale(g)
    best = -math.inf
    wit = (math.nan, math.nan)
    rows = max(1, chunk // len(g))
    for i0 in range(0, len(g), rows):
        a = g[i0:i0 + rows, None]
        va = vals[i0:i0 + rows, None]
        ex = scale(a + g[None, :]) - va - vals[None, :]
        idx = np.unravel_index(np.argmax(ex), ex.shape)
        if ex[idx] > best:
            best = float(ex[idx])
            wit = (float(g[i0 + idx[0]]), float(g[idx[1]]))
    return best, wit


def pair_violation(scale, a, b):
    """scale(a+b) - scale(a) - scale(b) at one pair."""
    return scale(a + b) - scale(a) - scale(b)


@lru_cache(maxsize=64)
def _qa_constant(scale, R0, top, per_decade):
    grid = class_grid(R0, top, per_decade)
    best, _ = _pair_excess(scale, grid)
    return max(0.0, best)


def quasi_additive_c(scale, R0=None, top=1e8, per_decade=64):
    """Smallest c with scale(a+b) <= scale(a) + scale(b) + c over a grid search."""
    R0 = max(scale.R0 if R0 is None else R0, 1e-300)
    return _qa_constant(scale, float(R0), float(top), int(per_decade))


def check_class(scale, cls, grid=None, *, c=None, R0=None, tol=None, offset=1.0):
    """Test one class inequality on a grid and report the worst violation."""
    if cls not in CLASSES:
        raise ScaleError(f"unknown class {cls!r}")
    R0 = scale.R0 if R0 is None else R0
    grid = class_grid(R0) if grid is None else np.asarray(grid, dtype=float)
    if grid.min() < R0 * (1 - 1e-12):
        raise ScaleError(f"grid starts at {grid.min()} below R0={R0}")
    desc = f"{len(grid)} points in [{grid.min():.6g}, {grid.max():.6g}]"
    if cls in (L1, L3):
        if len(grid) * (len(grid) + 1) // 2 < 100:
            raise ScaleError("class check needs at least 100 pairs")
        best, wit = _pair_excess(scale, grid)
        cc = 0.0 if cls == L3 else (scale.quasi_additive_c if c is None else c)
        excess = best - cc
        tol = 1e-9 * max(1.0, abs(scale(grid.max()))) if tol is None else tol
        verdict = "pass" if excess <= tol else "fail"
        return ClassReport(str(scale), cls, desc, float(excess), wit, verdict, tol, {"c": cc})
    # L2: relative deviation under bounded shifts, judged on the top decade
    tol = 0.05 if tol is None else tol
    d = np.linspace(-offset, offset, 21)
    x = grid[scale(grid) > 0]
    x = x[x - offset >= 0] if len(x) else x
    if len(x) < 2:
        raise ScaleError("L2 check needs grid points where the scale is positive")
    base = scale(x)
    dev = np.max(np.abs(scale(x[:, None] + d[None, :]) / base[:, None] - 1.0), axis=1)
    top = x >= x.max() / 10.0
    worst = float(dev[top].max())
    decades = np.floor(np.log10(x / x.min()))
    per_dec = np.array([dev[decades == q].max() for q in np.unique(decades)])
    trend = bool(np.all(np.diff(per_dec) <= 1e-12 * np.maximum(1.0, per_dec[:-1])))
    verdict = "pass" if worst <= tol and trend else "fail"
    i = int(np.argmax(np.where(top, dev, -1.0)))
    return ClassReport(str(scale), cls, desc, worst, (float(x[i]),), verdict, tol,
                       {"decreasing": trend, "offset": offset})


def triple_grid(lo_decade=8, hi_decade=300, count=400):
    """Default grid for condition (ii) ratios; log^[3] is positive from 1e8."""
    return np.logspace(lo_decade, hi_decade, count)


def condition_ratios(triple, grid, p_max=None, ks=(0.25, 0.5, 0.9)):
    """Ratio sequences of condition (ii) on a grid, keyed by a short label."""
    a, b, g = triple.alpha, triple.beta, triple.gamma
    x = np.asarray(grid, dtype=float)
    p_max = triple.p_max if p_max is None else p_max
    den = b(np.log(g(x)))
    out = {}
    for p in range(2, p_max + 1):
        out[f"alpha(log^[{p}] x)/beta(log gamma x)"] = a(iter_log(p, x)) / den
    ax = a(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        out["alpha(log x)/alpha(x)"] = np.where(ax > 0, a(np.log(x)) / ax, np.inf)
    # the inverse ratio lives on the range of beta(log gamma x), in log space
    y = den
    base = log_inverse(a, y)
    for k in ks:
        out[f"alpha^-1({k} y)/alpha^-1(y)"] = np.exp(log_inverse(a, k * y) - base)
    return out


def check_triple(triple, grid=None, *, thresholds=(0.5, 0.5, 1.0), class_grids=None):
    """Check conditions (i) and (ii) for a triple.

    Condition (i): alpha in L1, beta in L2, gamma in L3, both by catalog
    guarantee and on a grid.  Condition (ii): each ratio sequence must be
    non-increasing over the top half of the grid and end below its threshold
    (the alpha^-1 family only needs to end below 1, since alpha = id gives
    the constant k).
    """
    grid = triple_grid() if grid is None else np.asarray(grid, dtype=float)
    if math.log10(grid.max() / grid.min()) < 4:
        raise ScaleError("condition (ii) grid must span at least 4 decades")
    problems = []
    sub = {}
    for role, sc, cls in (("alpha", triple.alpha, L1), ("beta", triple.beta, L2), ("gamma", triple.gamma, L3)):
        if cls not in sc.guaranteed:
            problems.append(f"{role}={sc} not declared {cls}")
        g = None if class_grids is None else class_grids.get(role)
        rep = check_class(sc, cls, g if g is not None else class_grid(max(sc.R0, 1.0), 1e8, 64))
        sub[f"{role}:{cls}"] = rep
        if not rep.passed:
            problems.append(f"{role}={sc} fails {cls} (violation {rep.worst_violation:.3g})")
    if problems:
        return ClassReport(str(triple), "condition (i)", "class grids", math.inf, (), "fail",
                           0.0, {"problems": problems, "classes": sub})
    ratios = condition_ratios(triple, grid)
    half = len(grid) // 2
    worst = -math.inf
    wit = ()
    summary = {}
    for name, seq in ratios.items():
        thr = thresholds[2] if name.startswith("alpha^-1") else (
            thresholds[1] if name.startswith("alpha(log x)") else thresholds[0])
        tail = seq[half:]
        dec = bool(np.all(np.diff(tail) <= 1e-12 * np.maximum(1.0, np.abs(tail[:-1]))))
        last = float(seq[-1])
        ok = dec and last < thr
        summary[name] = {"last": last, "threshold": thr, "decreasing": dec, "ok": ok}
        if not ok:
            problems.append(f"{name}: last={last:.4g}, decreasing={dec}")
        if last / thr > worst:
            worst = last / thr
            wit = (name, float(grid[-1]))
    verdict = "fail" if problems else "pass"
    desc = f"{len(grid)} points in [{grid.min():.3g}, {grid.max():.3g}]"
    return ClassReport(str(triple), "condition (ii)", desc, float(worst), wit, verdict, 1.0,
                       {"ratios": summary, "problems": problems, "classes": sub})
