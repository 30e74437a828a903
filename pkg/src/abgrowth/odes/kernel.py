"""Compiled pieces of the ray integrator.

Coefficients reach the kernels in one of two compiled forms:

* exp-poly (``cmode == 0``): each coefficient is a sum of terms
  ``c * z**m * exp(q(z))`` with ``q`` a polynomial.  Arrays ``tc`` (complex
  factors), ``tp`` (powers), ``te`` (exponent polynomials, padded, lowest
  degree first) and ``toff`` (term ranges per coefficient).
* stack program (``cmode == 1``): postfix opcodes for anything else built
  from polynomials, sums, products and exponentials.

Status codes returned by every kernel: 0 completed, 1 step budget
exhausted, 2 tolerance failure.
"""
import math

import numpy as np
from numba import njit

OP_CONST, OP_Z, OP_ADD, OP_MUL, OP_EXP, OP_NEG = 0, 1, 2, 3, 4, 5

STATUS_NAMES = ("completed", "step_budget", "tolerance_failure")

# Dormand-Prince 5(4) tableau
_A = np.zeros((7, 7))
_A[1, :1] = [1 / 5]
_A[2, :2] = [3 / 40, 9 / 40]
_A[3, :3] = [44 / 45, -56 / 15, 32 / 9]
_A[4, :4] = [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]
_A[5, :5] = [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]
_A[6, :6] = [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40])


@njit(inline="always")
def stack_eval(ops, oargs, consts, offs, stack, j, z):
    sp = 0
    for i in range(offs[j], offs[j + 1]):
        op = ops[i]
        if op == OP_CONST:
            stack[sp] = consts[oargs[i]]
            sp += 1
        elif op == OP_Z:
            stack[sp] = z
            sp += 1
        elif op == OP_ADD:
            sp -= 1
            stack[sp - 1] = stack[sp - 1] + stack[sp]
        elif op == OP_MUL:
            sp -= 1
            stack[sp - 1] = stack[sp - 1] * stack[sp]
        elif op == OP_EXP:
            stack[sp - 1] = np.exp(stack[sp - 1])
        else:
            stack[sp - 1] = -stack[sp - 1]
    if sp == 0:
        return 0j
    return stack[0]


@njit(inline="always")
def coef_expoly(tc, tp, te, toff, j, z):
    acc = 0j
    d = te.shape[1]
    for t in range(toff[j], toff[j + 1]):
        v = tc[t]
        for _ in range(tp[t]):
            v *= z
        ex = te[t, d - 1]
        for q in range(d - 2, -1, -1):
            ex = ex * z + te[t, q]
        if ex != 0j:
            v *= np.exp(ex)
        acc += v
    return acc


@njit(inline="always")
def coef_eval(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, j, z):
    if cmode == 0:
        return coef_expoly(tc, tp, te, toff, j, z)
    return stack_eval(ops, oargs, consts, offs, stack, j, z)


@njit(cache=True)
def coef_values(cmode, tc, tp, te, toff, ops, oargs, consts, offs, k, zs):
    """Evaluate all k coefficients at an array of points (used by tests)."""
    stack = np.empty(64, np.complex128)
    out = np.empty((zs.shape[0], k), np.complex128)
    for i in range(zs.shape[0]):
        for j in range(k):
            out[i, j] = coef_eval(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, j, zs[i])
    return out


@njit(inline="always")
def _rhs(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, k, p, z, dirn, Y, out, a):
    for j in range(k):
        a[j] = -dirn * coef_eval(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, j, z)
    for c in range(p):
        acc = 0j
        for j in range(k):
            acc += a[j] * Y[j, c]
        for j in range(k - 1):
            out[j, c] = dirn * Y[j + 1, c]
        out[k - 1, c] = acc


@njit(cache=True, nogil=True)
def dp45_generic(cmode, tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn,
                 radii, tol, budget, h0, outY, outS, renorm):
    """Array-based kernel for any (k, p); same contract as the unrolled ones."""
    k, p = Y0.shape
    stack = np.empty(64, np.complex128)
    a = np.empty(k, np.complex128)
    Y = Y0.copy()
    S = S0.copy()
    K = np.empty((7, k, p), np.complex128)
    Yt = np.empty((k, p), np.complex128)
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    _rhs(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, k, p, z0, dirn, Y, K[0], a)
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns] = Y
            outS[ns] = S
            ns += 1
            continue
        if ns == nr:
            status = 0
            break
        if steps >= budget:
            status = 1
            break
        target = radii[ns]
        hs = h
        clipped = False
        if r + hs >= target:
            hs = target - r
            clipped = True
        for s in range(1, 7):
            for j in range(k):
                for c in range(p):
                    acc = 0j
                    for q in range(s):
                        acc += _A[s, q] * K[q, j, c]
                    Yt[j, c] = Y[j, c] + hs * acc
            _rhs(cmode, tc, tp, te, toff, ops, oargs, consts, offs, stack, k, p,
                 z0 + (r + _C[s] * hs) * dirn, dirn, Yt, K[s], a)
        err = 0.0
        for c in range(p):
            sc = 0.0
            e = 0.0
            for j in range(k):
                sc = max(sc, abs(Y[j, c].real), abs(Y[j, c].imag), abs(Yt[j, c].real), abs(Yt[j, c].imag))
                d = 0j
                for q in range(7):
                    d += _E[q] * K[q, j, c]
                e = max(e, abs(d.real), abs(d.imag))
            if sc > 0.0:
                err = max(err, hs * e / (tol * sc))
            elif e > 0.0:
                err = math.inf
        if not (err <= 1.0):
            if err != err or err == math.inf:
                h = 0.2 * hs
            else:
                h = hs * max(0.2, 0.9 * err ** -0.2)
            if h < 1e-13 * max(1.0, r):
                status = 2
                break
            continue
        steps += 1
        if clipped:
            r = target
        else:
            r = r + hs
            h = hs * min(5.0, 0.9 * err ** -0.2) if err > 0.0 else 5.0 * hs
        for c in range(p):
            m2 = 0.0
            for j in range(k):
                Y[j, c] = Yt[j, c]
                K[0, j, c] = K[6, j, c]
                m2 = max(m2, Y[j, c].real * Y[j, c].real + Y[j, c].imag * Y[j, c].imag)
            if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
                mg = math.sqrt(m2)
                inv = 1.0 / mg
                for j in range(k):
                    Y[j, c] *= inv
                    K[0, j, c] *= inv
                S[c] += math.log(mg)
                renorm[c] += 1
    return r, steps, status, ns
