"""Overflow-safe complex numbers: a unit-range mantissa times exp(log_scale)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

ABSORB = 40.0
_E = math.e


@dataclass(frozen=True)
class ScaledComplex:
    """``mantissa * exp(log_scale)`` with 1 <= |mantissa| < e, or zero.

    Zero is stored as mantissa 0 and log_scale -inf.
    """

    mantissa: complex
    log_scale: float

    @classmethod
    def zero(cls):
        return cls(0j, -math.inf)

    @classmethod
    def from_log(cls, w):
        """From the complex log ``log|v| + i arg v`` (real part -inf for zero)."""
        w = complex(w)
        if w.real == -math.inf:
            return cls.zero()
        if not math.isfinite(w.real):
            raise OverflowError(f"log-magnitude {w.real} is not finite")
        s = math.floor(w.real)
        m = cmath.exp(complex(w.real - s, w.imag))
        if abs(m) >= _E:
            m /= _E
            s += 1
        return cls(m, float(s))

    @classmethod
    def from_complex(cls, v):
        v = complex(v)
        if v == 0:
            return cls.zero()
        return cls.from_log(complex(math.log(abs(v)), cmath.phase(v)))

    @classmethod
    def normalized(cls, m, s):
        """Renormalize an arbitrary mantissa/scale pair."""
        m = complex(m)
        if m == 0 or s == -math.inf:
            return cls.zero()
        return cls.from_log(complex(math.log(abs(m)) + s, cmath.phase(m)))

    @property
    def is_zero(self):
        return self.mantissa == 0

    def log_abs(self):
        if self.is_zero:
            return -math.inf
        return self.log_scale + math.log(abs(self.mantissa))

    def phase(self):
        return cmath.phase(self.mantissa)

    def to_log(self):
        if self.is_zero:
            return complex(-math.inf, 0.0)
        return complex(self.log_abs(), self.phase())

    def to_complex(self):
        """Native value; overflows to inf beyond the float range."""
        if self.is_zero:
            return 0j
        try:
            return self.mantissa * math.exp(self.log_scale)
        except OverflowError:
            return complex(math.copysign(math.inf, self.mantissa.real), math.copysign(math.inf, self.mantissa.imag))

    __complex__ = to_complex

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex.normalized(self.mantissa * other.mantissa, self.log_scale + other.log_scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by a zero ScaledComplex")
        if self.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex.normalized(self.mantissa / other.mantissa, self.log_scale - other.log_scale)

    def __neg__(self):
        return ScaledComplex(-self.mantissa, self.log_scale)

    def __add__(self, other):
        other = _coerce(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        big, small = (self, other) if self.log_scale >= other.log_scale else (other, self)
        gap = big.log_scale - small.log_scale
        if gap > ABSORB:
            return big
        return ScaledComplex.normalized(big.mantissa + small.mantissa * math.exp(-gap), big.log_scale)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __repr__(self):
        return f"ScaledComplex({self.mantissa!r}, {self.log_scale!r})"


def _coerce(x):
    return x if isinstance(x, ScaledComplex) else ScaledComplex.from_complex(x)
