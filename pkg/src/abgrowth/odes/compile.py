"""Lower coefficient expression trees to the arrays the ray kernels consume."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..functions import expr as ex
from . import kernel as kn

MAX_TERMS = 256
STACK_SIZE = 64


class CompileError(ValueError):
    pass


@dataclass(frozen=True)
class CompiledCoefficients:
    cmode: int
    tc: np.ndarray
    tp: np.ndarray
    te: np.ndarray
    toff: np.ndarray
    ops: np.ndarray
    oargs: np.ndarray
    consts: np.ndarray
    offs: np.ndarray

    @property
    def form(self):
        return "ep" if self.cmode == 0 else "st"

    def args(self):
        return (self.tc, self.tp, self.te, self.toff, self.ops, self.oargs, self.consts, self.offs)

    def values(self, k, zs):
        """All k coefficient values at points zs, shape (len(zs), k)."""
        zs = np.ascontiguousarray(np.atleast_1d(zs), dtype=np.complex128)
        return kn.coef_values(self.cmode, *self.args(), k, zs)


def _expoly_terms(node):
    """List of (c, m, q) meaning c * z^m * exp(q(z)); None if not of that shape."""
    if isinstance(node, ex.Poly):
        return [(complex(c), n, ()) for n, c in enumerate(node.coeffs) if c != 0]
    if isinstance(node, ex.Exp):
        if isinstance(node.arg, ex.Poly):
            return [(1 + 0j, 0, tuple(complex(c) for c in node.arg.coeffs))]
        return None
    if isinstance(node, ex.Sum):
        out = []
        for t in node.terms:
            sub = _expoly_terms(t)
            if sub is None:
                return None
            out.extend(sub)
        return out if len(out) <= MAX_TERMS else None
    if isinstance(node, ex.Prod):
        parts = [_expoly_terms(f) for f in node.factors]
        if any(p is None for p in parts):
            return None
        n = 1
        for p in parts:
            n *= len(p)
        if n > MAX_TERMS:
            return None
        out = []
        for combo in product(*parts):
            c, m, q = 1 + 0j, 0, ()
            for c2, m2, q2 in combo:
                c, m = c * c2, m + m2
                width = max(len(q), len(q2))
                q = tuple((q[i] if i < len(q) else 0) + (q2[i] if i < len(q2) else 0)
                          for i in range(width))
            out.append((c, m, q))
        return out
    if isinstance(node, ex.Series):
        raise CompileError(f"series coefficient {node.name!r} cannot be integrated; "
                           "give it in closed form")
    raise CompileError(f"unsupported node {type(node).__name__}")


def _stack_program(node, ops, oargs, consts):
    """Append a postfix program for node; returns the stack depth it needs."""
    def push_const(c):
        ops.append(kn.OP_CONST)
        oargs.append(len(consts))
        consts.append(complex(c))

    def emit(n):
        if isinstance(n, ex.Poly):
            cs = n.coeffs or (0,)
            push_const(cs[-1])
            for c in reversed(cs[:-1]):  # Horner
                ops.append(kn.OP_Z); oargs.append(0)
                ops.append(kn.OP_MUL); oargs.append(0)
                push_const(c)
                ops.append(kn.OP_ADD); oargs.append(0)
            return 1 if len(cs) == 1 else 2
        if isinstance(n, ex.Exp):
            d = emit(n.arg)
            ops.append(kn.OP_EXP); oargs.append(0)
            return d
        if isinstance(n, (ex.Sum, ex.Prod)):
            items = n.terms if isinstance(n, ex.Sum) else n.factors
            op = kn.OP_ADD if isinstance(n, ex.Sum) else kn.OP_MUL
            depth = emit(items[0])
            for it in items[1:]:
                depth = max(depth, 1 + emit(it))
                ops.append(op); oargs.append(0)
            return depth
        if isinstance(n, ex.Series):
            raise CompileError(f"series coefficient {n.name!r} cannot be integrated")
        raise CompileError(f"unsupported node {type(n).__name__}")

    return emit(node)


def compile_coefficients(nodes) -> CompiledCoefficients:
    """Compile coefficient trees A_0..A_{k-1} (exp-poly when possible)."""
    nodes = [getattr(n, "node", n) for n in nodes]
    terms = [_expoly_terms(n) for n in nodes]
    empty_c = np.zeros(1, np.complex128)
    empty_i = np.zeros(1, np.int64)
    if all(t is not None for t in terms):
        flat = [t for ts in terms for t in ts]
        width = max([len(q) for _, _, q in flat] + [1])
        tc = np.array([c for c, _, _ in flat] or [0j], np.complex128)
        tp = np.array([m for _, m, _ in flat] or [0], np.int64)
        te = np.zeros((max(1, len(flat)), width), np.complex128)
        for i, (_, _, q) in enumerate(flat):
            te[i, :len(q)] = q
        toff = np.cumsum([0] + [len(t) for t in terms]).astype(np.int64)
        return CompiledCoefficients(0, tc, tp, te, toff, empty_i, empty_i, empty_c,
                                    np.zeros(len(nodes) + 1, np.int64))
    ops, oargs, consts, offs = [], [], [], [0]
    for n in nodes:
        if _stack_program(n, ops, oargs, consts) > STACK_SIZE:
            raise CompileError("coefficient expression too deeply nested")
        offs.append(len(ops))
    return CompiledCoefficients(
        1, empty_c, empty_i, np.zeros((1, 1), np.complex128), np.zeros(len(nodes) + 1, np.int64),
        np.array(ops or [0], np.int64), np.array(oargs or [0], np.int64),
        np.array(consts or [0j], np.complex128), np.array(offs, np.int64))
