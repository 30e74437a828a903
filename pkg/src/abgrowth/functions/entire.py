"""Entire and meromorphic function models built on expression trees."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import expr as ex
from .scaled import ScaledComplex


class DepthExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EntireFunction:
    node: ex.Node
    label: str = ""
    cache_depth: int = 8
    _derivs: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __str__(self):
        return self.label or str(self.node)

    def logval(self, z):
        """Complex log of the value at points z (array in, array out)."""
        return ex.logval(self.node, np.asarray(z, dtype=complex))

    def log_abs(self, z):
        return self.logval(z).real

    def __call__(self, z):
        return eval_at(self, z)

    def taylor_log(self, N):
        return ex.taylor_log(self.node, N)

    @property
    def nonneg_coefficients(self):
        return ex.is_nonneg(self.node)

    @property
    def is_polynomial(self):
        return ex.is_polynomial(self.node)

    def derivative(self, n=1):
        return derivative(self, n)

    def scaled(self, a):
        return EntireFunction(ex.mul(ex.const(a), self.node), f"{a}*({self})", self.cache_depth)

    def __add__(self, other):
        return EntireFunction(ex.add(self.node, _node(other)), f"({self})+({other})", self.cache_depth)

    def __mul__(self, other):
        return EntireFunction(ex.mul(self.node, _node(other)), f"({self})*({other})", self.cache_depth)


def _node(f):
    if isinstance(f, EntireFunction):
        return f.node
    return ex.as_node(f)


def entire(spec, label=None):
    """Build an EntireFunction from an expression string, node or number."""
    if isinstance(spec, EntireFunction):
        return spec
    if isinstance(spec, str):
        return EntireFunction(ex.parse(spec), label or spec)
    node = ex.as_node(spec)
    return EntireFunction(node, label or str(node))


def eval_at(f, z):
    """Value of f at a single point as a ScaledComplex."""
    w = complex(f.logval(np.array([complex(z)]))[0])
    return ScaledComplex.from_log(w)


def derivative(f: EntireFunction, n: int = 1) -> EntireFunction:
    """n-th derivative by symbolic differentiation (memoized up to cache_depth)."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if n > f.cache_depth:
        raise DepthExceeded(f"derivative order {n} exceeds cache depth {f.cache_depth}")
    if n == 0:
        return f
    if n in f._derivs:
        return f._derivs[n]
    prev = derivative(f, n - 1)
    d = EntireFunction(ex.derivative_node(prev.node), f"d^{n}/dz^{n} {f}", f.cache_depth)
    f._derivs[n] = d
    return d


@dataclass(frozen=True)
class MeromorphicFunction:
    """numerator/denominator with the poles supplied explicitly.

    ``poles`` lists (location, multiplicity) pairs, complete inside
    ``valid_radius``.  ``n0`` is the pole multiplicity at the origin; by
    default it is read off the divisor.
    """

    numerator: EntireFunction
    denominator: EntireFunction
    poles: tuple = ()
    valid_radius: float = math.inf
    n0: int | None = None
    label: str = ""

    def __post_init__(self):
        poles = tuple((complex(p), int(m)) for p, m in self.poles)
        object.__setattr__(self, "poles", poles)
        if self.n0 is None:
            object.__setattr__(self, "n0", sum(m for p, m in poles if p == 0))
        for p, m in poles:
            if m < 1:
                raise ValueError(f"pole multiplicity must be positive, got {m} at {p}")
            scale = 1.0
            if abs(p) > 0:
                scale = max(1.0, math.exp(min(700.0, float(np.max(
                    self.denominator.log_abs(abs(p) * np.exp(2j * np.pi * np.arange(64) / 64)))))))
            val = self.denominator.log_abs(np.array([p]))[0]
            if val > math.log(1e-8 * scale):
                raise ValueError(f"declared pole {p} is not a zero of the denominator "
                                 f"(|den| = {math.exp(val):.3g})")

    def __str__(self):
        return self.label or f"({self.numerator})/({self.denominator})"

    def logval(self, z):
        z = np.asarray(z, dtype=complex)
        return self.numerator.logval(z) - self.denominator.logval(z)

    def log_abs(self, z):
        return self.logval(z).real
