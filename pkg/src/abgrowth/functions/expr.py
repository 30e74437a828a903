"""Expression trees for entire functions.

Values are handled in *complex-log form*: ``w = log|v| + i arg v`` with a
real part of ``-inf`` for zero.  Sums are log-sum-exp, products are sums of
logs, and ``exp(g)`` simply takes the native value of ``g`` as its log, so
magnitudes like exp(exp(z)) stay finite until log|f| itself overflows.

Grammar accepted by :func:`parse` (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*        division by constants only
    unary  := "-" unary | power
    power  := atom ("^" integer)?
    atom   := number | "z" | "i" | "pi" | "exp" "(" expr ")" | "(" expr ")"
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

ABSORB = 40.0  # log-units beyond which the smaller summand is dropped
NEG_INF = complex(-math.inf, 0.0)


class ExpressionSyntaxError(ValueError):
    def __init__(self, message, position, text):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}\n  {text}\n  {' ' * position}^")


class TruncationError(RuntimeError):
    """A power series did not settle within its coefficient budget."""


# ---------------------------------------------------------------- nodes

class Node:
    __slots__ = ()

    def __add__(self, other):
        return add(self, as_node(other))

    __radd__ = __add__

    def __mul__(self, other):
        return mul(self, as_node(other))

    __rmul__ = __mul__

    def __neg__(self):
        return mul(Poly((-1.0,)), self)

    def __sub__(self, other):
        return add(self, -as_node(other))

    def __rsub__(self, other):
        return add(as_node(other), -self)


@dataclass(frozen=True, eq=True)
class Poly(Node):
    coeffs: tuple  # lowest degree first

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = _fmt(c)
            terms.append(cs if n == 0 else (f"{cs}*z" if n == 1 else f"{cs}*z^{n}"))
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True, eq=True)
class Exp(Node):
    arg: Node

    def __str__(self):
        return f"exp({self.arg})"


@dataclass(frozen=True, eq=True)
class Sum(Node):
    terms: tuple

    def __str__(self):
        return " + ".join(f"({t})" for t in self.terms)


@dataclass(frozen=True, eq=True)
class Prod(Node):
    factors: tuple

    def __str__(self):
        return "*".join(f"({f})" for f in self.factors)


@dataclass(frozen=True, eq=True)
class Series(Node):
    """Power series given by a generator of log-coefficients.

    ``log_coeffs(N)`` returns a complex array of length N holding
    log a_n (real part -inf where a_n = 0).
    """

    log_coeffs: Callable
    name: str
    nonneg: bool = False
    cap: int = 1 << 15

    def __str__(self):
        return self.name


def _fmt(c):
    c = complex(c)
    if c.imag == 0:
        return f"{c.real:g}"
    return f"({c.real:g}{c.imag:+g}i)"


def as_node(x):
    if isinstance(x, Node):
        return x
    return Poly((complex(x),))


def const(c):
    return Poly((complex(c),))


Z = Poly((0j, 1 + 0j))


def _trim(coeffs):
    c = [complex(v) for v in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0j,)


def poly(coeffs):
    return Poly(_trim(coeffs))


def _is_zero(n):
    return isinstance(n, Poly) and all(c == 0 for c in n.coeffs)


def _is_one(n):
    return isinstance(n, Poly) and len(n.coeffs) == 1 and n.coeffs[0] == 1


def _poly_mul(a, b):
    return _trim(np.convolve(np.array(a, dtype=complex), np.array(b, dtype=complex)))


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=complex)
    out[:len(a)] += a
    out[:len(b)] += b
    return _trim(out)


def add(*terms):
    flat = []
    for t in terms:
        flat.extend(t.terms if isinstance(t, Sum) else (t,))
    pc = (0j,)
    rest = []
    for t in flat:
        if isinstance(t, Poly):
            pc = _poly_add(pc, t.coeffs)
        else:
            rest.append(t)
    if not _is_zero(Poly(pc)):
        rest.insert(0, Poly(pc))
    if not rest:
        return Poly((0j,))
    return rest[0] if len(rest) == 1 else Sum(tuple(rest))


def mul(*factors):
    flat = []
    for f in factors:
        flat.extend(f.factors if isinstance(f, Prod) else (f,))
    pc = (1 + 0j,)
    exps = []
    rest = []
    for f in flat:
        if isinstance(f, Poly):
            pc = _poly_mul(pc, f.coeffs)
        elif isinstance(f, Exp):
            exps.append(f.arg)
        else:
            rest.append(f)
    if _is_zero(Poly(pc)):
        return Poly((0j,))
    if len(exps) > 1:
        rest.insert(0, exp_(add(*exps)))
    elif exps:
        rest.insert(0, Exp(exps[0]))
    if not _is_one(Poly(pc)) or not rest:
        rest.insert(0, Poly(pc))
    return rest[0] if len(rest) == 1 else Prod(tuple(rest))


def exp_(arg):
    if isinstance(arg, Poly) and len(arg.coeffs) == 1:
        return Poly((complex(np.exp(arg.coeffs[0])),))
    return Exp(arg)


def power(base, n):
    if n < 0 or n != int(n):
        raise ValueError("only nonnegative integer powers of non-constant expressions")
    out = Poly((1 + 0j,))
    for _ in range(int(n)):
        out = mul(out, base)
    return out


# ---------------------------------------------------------------- structure

def derivative_node(node):
    if isinstance(node, Poly):
        c = node.coeffs
        return poly([n * c[n] for n in range(1, len(c))] or [0])
    if isinstance(node, Exp):
        return mul(derivative_node(node.arg), node)
    if isinstance(node, Sum):
        return add(*[derivative_node(t) for t in node.terms])
    if isinstance(node, Prod):
        fs = node.factors
        parts = []
        for i in range(len(fs)):
            parts.append(mul(*(fs[:i] + (derivative_node(fs[i]),) + fs[i + 1:])))
        return add(*parts)
    if isinstance(node, Series):
        return _series_derivative(node)
    raise TypeError(f"not an expression node: {node!r}")


def _series_derivative(s):
    gen = s.log_coeffs

    def log_coeffs(N):
        base = gen(N + 1)
        n = np.arange(1, N + 1)
        return np.log(n) + base[1:]

    return Series(log_coeffs, f"d({s.name})", s.nonneg, s.cap)


def is_nonneg(node):
    """True when every Taylor coefficient at 0 is a nonnegative real."""
    if isinstance(node, Poly):
        return all(c.imag == 0 and c.real >= 0 for c in map(complex, node.coeffs))
    if isinstance(node, Exp):
        return is_nonneg(node.arg)
    if isinstance(node, (Sum, Prod)):
        kids = node.terms if isinstance(node, Sum) else node.factors
        return all(is_nonneg(k) for k in kids)
    if isinstance(node, Series):
        return node.nonneg
    return False


def is_polynomial(node):
    if isinstance(node, Poly):
        return True
    if isinstance(node, Exp):
        return isinstance(node.arg, Poly) and len(node.arg.coeffs) == 1
    if isinstance(node, (Sum, Prod)):
        kids = node.terms if isinstance(node, Sum) else node.factors
        return all(is_polynomial(k) for k in kids)
    return False


# ---------------------------------------------------------------- evaluation

def _wrap(im):
    return np.remainder(im + np.pi, 2 * np.pi) - np.pi


def _clog(v):
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.log(v.astype(complex))
    return out


def lse(ws, axis=0):
    """Complex log-sum-exp along an axis with absorption of negligible terms."""
    ws = np.asarray(ws, dtype=complex)
    re = ws.real
    m = np.max(re, axis=axis, keepdims=True)
    finite = np.isfinite(m)
    m0 = np.where(finite, m, 0.0)
    with np.errstate(invalid="ignore", over="ignore"):
        d = ws - m0
        keep = d.real >= -ABSORB
        s = np.sum(np.where(keep, np.exp(np.where(keep, d, 0)), 0), axis=axis, keepdims=True)
        out = m0 + _clog(s)
    out = np.where(finite, out, m + 0j)
    out = np.squeeze(out, axis=axis)
    return out.real + 1j * _wrap(out.imag)


def native(node, z):
    """Native complex value where it is safe (polynomials, exponent arguments)."""
    if isinstance(node, Poly):
        return np.polyval(np.array(node.coeffs[::-1], dtype=complex), z)
    with np.errstate(over="ignore", invalid="ignore"):
        return np.exp(logval(node, z))


def logval(node, z):
    """Complex-log form of ``node`` at the points ``z`` (array)."""
    z = np.asarray(z, dtype=complex)
    if isinstance(node, Poly):
        v = native(node, z)
        out = _clog(v)
        bad = ~np.isfinite(v)
        if np.any(bad):
            lz = _clog(z[bad])
            terms = [np.log(complex(c)) + n * lz for n, c in enumerate(node.coeffs) if c != 0]
            out[bad] = lse(np.array(terms), axis=0)
        return out
    if isinstance(node, Exp):
        w = native(node.arg, z)
        return w.real + 1j * _wrap(w.imag)
    if isinstance(node, Sum):
        return lse(np.array([logval(t, z) for t in node.terms]), axis=0)
    if isinstance(node, Prod):
        out = np.zeros(z.shape, dtype=complex)
        for f in node.factors:
            out = out + logval(f, z)
        return out.real + 1j * _wrap(out.imag)
    if isinstance(node, Series):
        return _series_logval(node, z)
    raise TypeError(f"not an expression node: {node!r}")


def _series_logval(s, z):
    rmax = float(np.max(np.abs(z))) if z.size else 0.0
    coeffs = series_coeffs_for_radius(s, max(rmax, 1e-300))
    with np.errstate(divide="ignore"):
        lz = np.log(z.astype(complex))
    n = np.arange(len(coeffs))
    terms = coeffs[:, None] + n[:, None] * lz.ravel()[None, :]
    terms[0] = coeffs[0]  # z**0 = 1, also at z = 0
    return lse(terms, axis=0).reshape(z.shape)


def series_coeffs_for_radius(node, r, min_n=32):
    """Log Taylor coefficients, long enough that the tail is negligible at radius r.

    Doubles the length until the log-terms have decreased for 10 consecutive
    indices past their running maximum and the last term sits more than
    37 log-units (about 1e-16 relative) below the maximum.
    """
    lr = math.log(r) if r > 0 else -math.inf
    cap = getattr(node, "cap", 1 << 15)
    N = min_n
    while True:
        c = taylor_log(node, N)
        with np.errstate(invalid="ignore"):
            t = c.real + np.arange(N) * lr if r > 0 else c.real.copy()
        if r == 0:
            return c
        if _tail_settled(t):
            return c
        if N >= cap:
            raise TruncationError(f"series for {node} not settled within {cap} terms at r={r:g}")
        N *= 2


def _tail_settled(t):
    # zero coefficients (sparse series such as exp(z^2)) are skipped
    finite = np.isfinite(t)
    if not finite.any():
        return True
    idx = np.nonzero(finite)[0]
    tf = t[idx]
    imax = int(np.argmax(tf))
    tail = tf[imax:]
    if len(tail) < 12:
        # a terminating series (polynomial) is settled once all its terms are in
        return bool(idx[-1] < len(t) - 12)
    return bool(np.all(np.diff(tail[-11:]) < 0) and tail[-1] < tf[imax] - 37.0)


# ---------------------------------------------------------------- Taylor coefficients

@lru_cache(maxsize=256)
def _taylor_cached(node, N):
    out = _taylor(node, N)
    out.setflags(write=False)
    return out


def taylor_log(node, N):
    """First N Taylor coefficients at 0 in complex-log form."""
    return _taylor_cached(node, int(N))


def _log_convolve(a, b):
    N = len(a)
    out = np.full(N, NEG_INF, dtype=complex)
    for n in range(N):
        out[n] = lse(a[:n + 1] + b[n::-1])
    return out


def _taylor(node, N):
    if isinstance(node, Poly):
        c = np.zeros(N, dtype=complex)
        m = min(N, len(node.coeffs))
        c[:m] = node.coeffs[:m]
        return _clog(c)
    if isinstance(node, Series):
        c = np.asarray(node.log_coeffs(N), dtype=complex)
        return c[:N]
    if isinstance(node, Sum):
        return lse(np.array([taylor_log(t, N) for t in node.terms]), axis=0)
    if isinstance(node, Prod):
        out = taylor_log(node.factors[0], N)
        for f in node.factors[1:]:
            out = _log_convolve(out, taylor_log(f, N))
        return out
    if isinstance(node, Exp):
        g = taylor_log(node.arg, N)
        h = np.full(N, NEG_INF, dtype=complex)
        g0 = np.exp(g[0]) if np.isfinite(g[0].real) else 0j
        h[0] = complex(g0.real, _wrap(g0.imag))
        kg = np.log(np.arange(1, N)) + g[1:]  # log(k g_k), k = 1..N-1
        for n in range(1, N):
            h[n] = lse(kg[:n] + h[n - 1::-1][:n]) - math.log(n)
        return h
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------- parser

class _Parser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, msg, pos=None):
        raise ExpressionSyntaxError(msg, self.i if pos is None else pos, self.text)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def eat(self, ch):
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def parse(self):
        if not self.text.strip():
            self.error("empty expression", 0)
        node = self.expr()
        self.skip()
        if self.i != len(self.text):
            self.error(f"unexpected {self.text[self.i]!r}")
        return node

    def expr(self):
        node = self.term()
        while True:
            if self.eat("+"):
                node = add(node, self.term())
            elif self.eat("-"):
                node = add(node, -self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            if self.eat("*"):
                node = mul(node, self.unary())
            elif self.peek() == "/":
                pos = self.i
                self.i += 1
                den = self.unary()
                if not (isinstance(den, Poly) and len(den.coeffs) == 1):
                    self.error("division only by constants", pos)
                if den.coeffs[0] == 0:
                    self.error("division by zero", pos)
                node = mul(node, const(1 / den.coeffs[0]))
            else:
                return node

    def unary(self):
        if self.eat("-"):
            return -self.unary()
        if self.eat("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            pos = self.i
            neg = self.eat("-")
            self.skip()
            start = self.i
            while self.i < len(self.text) and self.text[self.i].isdigit():
                self.i += 1
            if start == self.i:
                self.error("expected an integer exponent", pos)
            n = int(self.text[start:self.i]) * (-1 if neg else 1)
            if n < 0:
                if isinstance(base, Poly) and len(base.coeffs) == 1 and base.coeffs[0] != 0:
                    return const(base.coeffs[0] ** n)
                self.error("negative exponents only for nonzero constants", pos)
            if n > 64:
                self.error("exponent too large (max 64)", pos)
            return power(base, n)
        return base

    def atom(self):
        self.skip()
        if self.i >= len(self.text):
            self.error("unexpected end of expression")
        ch = self.text[self.i]
        if ch == "(":
            self.i += 1
            node = self.expr()
            if not self.eat(")"):
                self.error("expected ')'")
            return node
        if ch.isdigit() or ch == ".":
            return self.number()
        if ch.isalpha():
            start = self.i
            while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
                self.i += 1
            name = self.text[start:self.i]
            if name == "z":
                return Z
            if name == "i":
                return const(1j)
            if name == "pi":
                return const(math.pi)
            if name == "exp":
                if not self.eat("("):
                    self.error("expected '(' after exp")
                arg = self.expr()
                if not self.eat(")"):
                    self.error("expected ')'")
                return exp_(arg)
            self.error(f"unknown name {name!r}", start)
        self.error(f"unexpected {ch!r}")

    def number(self):
        start = self.i
        t = self.text
        while self.i < len(t) and (t[self.i].isdigit() or t[self.i] == "."):
            self.i += 1
        if self.i < len(t) and t[self.i] in "eE":
            j = self.i + 1
            if j < len(t) and t[j] in "+-":
                j += 1
            if j < len(t) and t[j].isdigit():
                self.i = j
                while self.i < len(t) and t[self.i].isdigit():
                    self.i += 1
        try:
            return const(float(t[start:self.i]))
        except ValueError:
            self.error(f"bad number {t[start:self.i]!r}", start)


def parse(text):
    """Parse an expression string into a node; raises ExpressionSyntaxError."""
    return _Parser(text).parse()
