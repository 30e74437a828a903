"""Unrolled Dormand-Prince 5(4) ray kernels (generated by tools/gen_kernels.py).

Do not edit by hand; regenerate instead.
"""
import math

import numpy as np
from numba import njit

from .kernel import coef_expoly, stack_eval

# value-safe flags only: inf/nan must survive for the step-rejection logic
_FM = {"contract", "arcp", "nsz", "reassoc"}


@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k1_p1_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    k1_0_0 = a0 * y0_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        k2_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        k3_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        k4_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        k5_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        k6_0_0 = a0 * t0_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        k7_0_0 = a0 * n0_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag))
        e = max(abs(d0.real), abs(d0.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        m2 = y0_0.real * y0_0.real + y0_0.imag * y0_0.imag
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k1_p1_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    k1_0_0 = a0 * y0_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        k2_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        k3_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        k4_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        k5_0_0 = a0 * t0_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        k6_0_0 = a0 * t0_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        k7_0_0 = a0 * n0_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag))
        e = max(abs(d0.real), abs(d0.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        m2 = y0_0.real * y0_0.real + y0_0.imag * y0_0.imag
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k2_p1_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = a0 * y0_0 + a1 * y1_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = a0 * t0_0 + a1 * t1_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = a0 * n0_0 + a1 * n1_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k2_p1_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = a0 * y0_0 + a1 * y1_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = a0 * t0_0 + a1 * t1_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = a0 * t0_0 + a1 * t1_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = a0 * n0_0 + a1 * n1_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k2_p2_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    s_0 = S0[0]
    s_1 = S0[1]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = a0 * y0_0 + a1 * y1_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = a0 * y0_1 + a1 * y1_1
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = a0 * t0_0 + a1 * t1_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = a0 * t0_0 + a1 * t1_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = a0 * t0_0 + a1 * t1_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = a0 * t0_0 + a1 * t1_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = a0 * t0_0 + a1 * t1_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = a0 * t0_1 + a1 * t1_1
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        k7_0_0 = dirn * n1_0
        k7_1_0 = a0 * n0_0 + a1 * n1_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = a0 * n0_1 + a1 * n1_1
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k2_p2_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    s_0 = S0[0]
    s_1 = S0[1]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = a0 * y0_0 + a1 * y1_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = a0 * y0_1 + a1 * y1_1
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = a0 * t0_0 + a1 * t1_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = a0 * t0_0 + a1 * t1_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = a0 * t0_0 + a1 * t1_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = a0 * t0_0 + a1 * t1_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = a0 * t0_1 + a1 * t1_1
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = a0 * t0_0 + a1 * t1_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = a0 * t0_1 + a1 * t1_1
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        k7_0_0 = dirn * n1_0
        k7_1_0 = a0 * n0_0 + a1 * n1_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = a0 * n0_1 + a1 * n1_1
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k3_p1_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    y2_0 = Y0[2, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outY[ns, 2, 0] = y2_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k3_p1_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    y2_0 = Y0[2, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outY[ns, 2, 0] = y2_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k3_p3_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y0_2 = Y0[0, 2]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    y1_2 = Y0[1, 2]
    y2_0 = Y0[2, 0]
    y2_1 = Y0[2, 1]
    y2_2 = Y0[2, 2]
    s_0 = S0[0]
    s_1 = S0[1]
    s_2 = S0[2]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = dirn * y2_1
    k1_2_1 = a0 * y0_1 + a1 * y1_1 + a2 * y2_1
    k1_0_2 = dirn * y1_2
    k1_1_2 = dirn * y2_2
    k1_2_2 = a0 * y0_2 + a1 * y1_2 + a2 * y2_2
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 0, 2] = y0_2
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outY[ns, 1, 2] = y1_2
            outY[ns, 2, 0] = y2_0
            outY[ns, 2, 1] = y2_1
            outY[ns, 2, 2] = y2_2
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
            outS[ns, 2] = s_2
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t0_2 = y0_2 + hs * ((1/5)*k1_0_2)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        t1_2 = y1_2 + hs * ((1/5)*k1_1_2)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t2_1 = y2_1 + hs * ((1/5)*k1_2_1)
        t2_2 = y2_2 + hs * ((1/5)*k1_2_2)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = dirn * t2_1
        k2_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k2_0_2 = dirn * t1_2
        k2_1_2 = dirn * t2_2
        k2_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t0_2 = y0_2 + hs * ((3/40)*k1_0_2 + (9/40)*k2_0_2)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        t1_2 = y1_2 + hs * ((3/40)*k1_1_2 + (9/40)*k2_1_2)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t2_1 = y2_1 + hs * ((3/40)*k1_2_1 + (9/40)*k2_2_1)
        t2_2 = y2_2 + hs * ((3/40)*k1_2_2 + (9/40)*k2_2_2)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = dirn * t2_1
        k3_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k3_0_2 = dirn * t1_2
        k3_1_2 = dirn * t2_2
        k3_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t0_2 = y0_2 + hs * ((44/45)*k1_0_2 + (-56/15)*k2_0_2 + (32/9)*k3_0_2)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        t1_2 = y1_2 + hs * ((44/45)*k1_1_2 + (-56/15)*k2_1_2 + (32/9)*k3_1_2)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t2_1 = y2_1 + hs * ((44/45)*k1_2_1 + (-56/15)*k2_2_1 + (32/9)*k3_2_1)
        t2_2 = y2_2 + hs * ((44/45)*k1_2_2 + (-56/15)*k2_2_2 + (32/9)*k3_2_2)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = dirn * t2_1
        k4_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k4_0_2 = dirn * t1_2
        k4_1_2 = dirn * t2_2
        k4_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t0_2 = y0_2 + hs * ((19372/6561)*k1_0_2 + (-25360/2187)*k2_0_2 + (64448/6561)*k3_0_2 + (-212/729)*k4_0_2)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        t1_2 = y1_2 + hs * ((19372/6561)*k1_1_2 + (-25360/2187)*k2_1_2 + (64448/6561)*k3_1_2 + (-212/729)*k4_1_2)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t2_1 = y2_1 + hs * ((19372/6561)*k1_2_1 + (-25360/2187)*k2_2_1 + (64448/6561)*k3_2_1 + (-212/729)*k4_2_1)
        t2_2 = y2_2 + hs * ((19372/6561)*k1_2_2 + (-25360/2187)*k2_2_2 + (64448/6561)*k3_2_2 + (-212/729)*k4_2_2)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = dirn * t2_1
        k5_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k5_0_2 = dirn * t1_2
        k5_1_2 = dirn * t2_2
        k5_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t0_2 = y0_2 + hs * ((9017/3168)*k1_0_2 + (-355/33)*k2_0_2 + (46732/5247)*k3_0_2 + (49/176)*k4_0_2 + (-5103/18656)*k5_0_2)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        t1_2 = y1_2 + hs * ((9017/3168)*k1_1_2 + (-355/33)*k2_1_2 + (46732/5247)*k3_1_2 + (49/176)*k4_1_2 + (-5103/18656)*k5_1_2)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t2_1 = y2_1 + hs * ((9017/3168)*k1_2_1 + (-355/33)*k2_2_1 + (46732/5247)*k3_2_1 + (49/176)*k4_2_1 + (-5103/18656)*k5_2_1)
        t2_2 = y2_2 + hs * ((9017/3168)*k1_2_2 + (-355/33)*k2_2_2 + (46732/5247)*k3_2_2 + (49/176)*k4_2_2 + (-5103/18656)*k5_2_2)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = dirn * t2_1
        k6_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k6_0_2 = dirn * t1_2
        k6_1_2 = dirn * t2_2
        k6_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n0_2 = y0_2 + hs * ((35/384)*k1_0_2 + (500/1113)*k3_0_2 + (125/192)*k4_0_2 + (-2187/6784)*k5_0_2 + (11/84)*k6_0_2)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        n1_2 = y1_2 + hs * ((35/384)*k1_1_2 + (500/1113)*k3_1_2 + (125/192)*k4_1_2 + (-2187/6784)*k5_1_2 + (11/84)*k6_1_2)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n2_1 = y2_1 + hs * ((35/384)*k1_2_1 + (500/1113)*k3_2_1 + (125/192)*k4_2_1 + (-2187/6784)*k5_2_1 + (11/84)*k6_2_1)
        n2_2 = y2_2 + hs * ((35/384)*k1_2_2 + (500/1113)*k3_2_2 + (125/192)*k4_2_2 + (-2187/6784)*k5_2_2 + (11/84)*k6_2_2)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = dirn * n2_1
        k7_2_1 = a0 * n0_1 + a1 * n1_1 + a2 * n2_1
        k7_0_2 = dirn * n1_2
        k7_1_2 = dirn * n2_2
        k7_2_2 = a0 * n0_2 + a1 * n1_2 + a2 * n2_2
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        d2 = (71/57600)*k1_2_1 + (-71/16695)*k3_2_1 + (71/1920)*k4_2_1 + (-17253/339200)*k5_2_1 + (22/525)*k6_2_1 + (-1/40)*k7_2_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag), abs(y2_1.real), abs(y2_1.imag), abs(n2_1.real), abs(n2_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_2 + (-71/16695)*k3_0_2 + (71/1920)*k4_0_2 + (-17253/339200)*k5_0_2 + (22/525)*k6_0_2 + (-1/40)*k7_0_2
        d1 = (71/57600)*k1_1_2 + (-71/16695)*k3_1_2 + (71/1920)*k4_1_2 + (-17253/339200)*k5_1_2 + (22/525)*k6_1_2 + (-1/40)*k7_1_2
        d2 = (71/57600)*k1_2_2 + (-71/16695)*k3_2_2 + (71/1920)*k4_2_2 + (-17253/339200)*k5_2_2 + (22/525)*k6_2_2 + (-1/40)*k7_2_2
        sc = max(abs(y0_2.real), abs(y0_2.imag), abs(n0_2.real), abs(n0_2.imag), abs(y1_2.real), abs(y1_2.imag), abs(n1_2.real), abs(n1_2.imag), abs(y2_2.real), abs(y2_2.imag), abs(n2_2.real), abs(n2_2.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y0_2 = n0_2
        k1_0_2 = k7_0_2
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        y1_2 = n1_2
        k1_1_2 = k7_1_2
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y2_1 = n2_1
        k1_2_1 = k7_2_1
        y2_2 = n2_2
        k1_2_2 = k7_2_2
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag, y2_1.real * y2_1.real + y2_1.imag * y2_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            y2_1 *= inv
            k1_2_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
        m2 = max(y0_2.real * y0_2.real + y0_2.imag * y0_2.imag, y1_2.real * y1_2.real + y1_2.imag * y1_2.imag, y2_2.real * y2_2.real + y2_2.imag * y2_2.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_2 *= inv
            k1_0_2 *= inv
            y1_2 *= inv
            k1_1_2 *= inv
            y2_2 *= inv
            k1_2_2 *= inv
            s_2 += math.log(mg)
            renorm[2] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k3_p3_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y0_2 = Y0[0, 2]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    y1_2 = Y0[1, 2]
    y2_0 = Y0[2, 0]
    y2_1 = Y0[2, 1]
    y2_2 = Y0[2, 2]
    s_0 = S0[0]
    s_1 = S0[1]
    s_2 = S0[2]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = dirn * y2_1
    k1_2_1 = a0 * y0_1 + a1 * y1_1 + a2 * y2_1
    k1_0_2 = dirn * y1_2
    k1_1_2 = dirn * y2_2
    k1_2_2 = a0 * y0_2 + a1 * y1_2 + a2 * y2_2
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 0, 2] = y0_2
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outY[ns, 1, 2] = y1_2
            outY[ns, 2, 0] = y2_0
            outY[ns, 2, 1] = y2_1
            outY[ns, 2, 2] = y2_2
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
            outS[ns, 2] = s_2
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t0_2 = y0_2 + hs * ((1/5)*k1_0_2)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        t1_2 = y1_2 + hs * ((1/5)*k1_1_2)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t2_1 = y2_1 + hs * ((1/5)*k1_2_1)
        t2_2 = y2_2 + hs * ((1/5)*k1_2_2)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = dirn * t2_1
        k2_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k2_0_2 = dirn * t1_2
        k2_1_2 = dirn * t2_2
        k2_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t0_2 = y0_2 + hs * ((3/40)*k1_0_2 + (9/40)*k2_0_2)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        t1_2 = y1_2 + hs * ((3/40)*k1_1_2 + (9/40)*k2_1_2)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t2_1 = y2_1 + hs * ((3/40)*k1_2_1 + (9/40)*k2_2_1)
        t2_2 = y2_2 + hs * ((3/40)*k1_2_2 + (9/40)*k2_2_2)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = dirn * t2_1
        k3_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k3_0_2 = dirn * t1_2
        k3_1_2 = dirn * t2_2
        k3_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t0_2 = y0_2 + hs * ((44/45)*k1_0_2 + (-56/15)*k2_0_2 + (32/9)*k3_0_2)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        t1_2 = y1_2 + hs * ((44/45)*k1_1_2 + (-56/15)*k2_1_2 + (32/9)*k3_1_2)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t2_1 = y2_1 + hs * ((44/45)*k1_2_1 + (-56/15)*k2_2_1 + (32/9)*k3_2_1)
        t2_2 = y2_2 + hs * ((44/45)*k1_2_2 + (-56/15)*k2_2_2 + (32/9)*k3_2_2)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = dirn * t2_1
        k4_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k4_0_2 = dirn * t1_2
        k4_1_2 = dirn * t2_2
        k4_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t0_2 = y0_2 + hs * ((19372/6561)*k1_0_2 + (-25360/2187)*k2_0_2 + (64448/6561)*k3_0_2 + (-212/729)*k4_0_2)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        t1_2 = y1_2 + hs * ((19372/6561)*k1_1_2 + (-25360/2187)*k2_1_2 + (64448/6561)*k3_1_2 + (-212/729)*k4_1_2)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t2_1 = y2_1 + hs * ((19372/6561)*k1_2_1 + (-25360/2187)*k2_2_1 + (64448/6561)*k3_2_1 + (-212/729)*k4_2_1)
        t2_2 = y2_2 + hs * ((19372/6561)*k1_2_2 + (-25360/2187)*k2_2_2 + (64448/6561)*k3_2_2 + (-212/729)*k4_2_2)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = dirn * t2_1
        k5_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k5_0_2 = dirn * t1_2
        k5_1_2 = dirn * t2_2
        k5_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t0_2 = y0_2 + hs * ((9017/3168)*k1_0_2 + (-355/33)*k2_0_2 + (46732/5247)*k3_0_2 + (49/176)*k4_0_2 + (-5103/18656)*k5_0_2)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        t1_2 = y1_2 + hs * ((9017/3168)*k1_1_2 + (-355/33)*k2_1_2 + (46732/5247)*k3_1_2 + (49/176)*k4_1_2 + (-5103/18656)*k5_1_2)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t2_1 = y2_1 + hs * ((9017/3168)*k1_2_1 + (-355/33)*k2_2_1 + (46732/5247)*k3_2_1 + (49/176)*k4_2_1 + (-5103/18656)*k5_2_1)
        t2_2 = y2_2 + hs * ((9017/3168)*k1_2_2 + (-355/33)*k2_2_2 + (46732/5247)*k3_2_2 + (49/176)*k4_2_2 + (-5103/18656)*k5_2_2)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = dirn * t2_1
        k6_2_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1
        k6_0_2 = dirn * t1_2
        k6_1_2 = dirn * t2_2
        k6_2_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n0_2 = y0_2 + hs * ((35/384)*k1_0_2 + (500/1113)*k3_0_2 + (125/192)*k4_0_2 + (-2187/6784)*k5_0_2 + (11/84)*k6_0_2)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        n1_2 = y1_2 + hs * ((35/384)*k1_1_2 + (500/1113)*k3_1_2 + (125/192)*k4_1_2 + (-2187/6784)*k5_1_2 + (11/84)*k6_1_2)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n2_1 = y2_1 + hs * ((35/384)*k1_2_1 + (500/1113)*k3_2_1 + (125/192)*k4_2_1 + (-2187/6784)*k5_2_1 + (11/84)*k6_2_1)
        n2_2 = y2_2 + hs * ((35/384)*k1_2_2 + (500/1113)*k3_2_2 + (125/192)*k4_2_2 + (-2187/6784)*k5_2_2 + (11/84)*k6_2_2)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = dirn * n2_1
        k7_2_1 = a0 * n0_1 + a1 * n1_1 + a2 * n2_1
        k7_0_2 = dirn * n1_2
        k7_1_2 = dirn * n2_2
        k7_2_2 = a0 * n0_2 + a1 * n1_2 + a2 * n2_2
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        d2 = (71/57600)*k1_2_1 + (-71/16695)*k3_2_1 + (71/1920)*k4_2_1 + (-17253/339200)*k5_2_1 + (22/525)*k6_2_1 + (-1/40)*k7_2_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag), abs(y2_1.real), abs(y2_1.imag), abs(n2_1.real), abs(n2_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_2 + (-71/16695)*k3_0_2 + (71/1920)*k4_0_2 + (-17253/339200)*k5_0_2 + (22/525)*k6_0_2 + (-1/40)*k7_0_2
        d1 = (71/57600)*k1_1_2 + (-71/16695)*k3_1_2 + (71/1920)*k4_1_2 + (-17253/339200)*k5_1_2 + (22/525)*k6_1_2 + (-1/40)*k7_1_2
        d2 = (71/57600)*k1_2_2 + (-71/16695)*k3_2_2 + (71/1920)*k4_2_2 + (-17253/339200)*k5_2_2 + (22/525)*k6_2_2 + (-1/40)*k7_2_2
        sc = max(abs(y0_2.real), abs(y0_2.imag), abs(n0_2.real), abs(n0_2.imag), abs(y1_2.real), abs(y1_2.imag), abs(n1_2.real), abs(n1_2.imag), abs(y2_2.real), abs(y2_2.imag), abs(n2_2.real), abs(n2_2.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y0_2 = n0_2
        k1_0_2 = k7_0_2
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        y1_2 = n1_2
        k1_1_2 = k7_1_2
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y2_1 = n2_1
        k1_2_1 = k7_2_1
        y2_2 = n2_2
        k1_2_2 = k7_2_2
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag, y2_1.real * y2_1.real + y2_1.imag * y2_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            y2_1 *= inv
            k1_2_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
        m2 = max(y0_2.real * y0_2.real + y0_2.imag * y0_2.imag, y1_2.real * y1_2.real + y1_2.imag * y1_2.imag, y2_2.real * y2_2.real + y2_2.imag * y2_2.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_2 *= inv
            k1_0_2 *= inv
            y1_2 *= inv
            k1_1_2 *= inv
            y2_2 *= inv
            k1_2_2 *= inv
            s_2 += math.log(mg)
            renorm[2] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k4_p1_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    y2_0 = Y0[2, 0]
    y3_0 = Y0[3, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
    a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = dirn * y3_0
    k1_3_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0 + a3 * y3_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outY[ns, 2, 0] = y2_0
            outY[ns, 3, 0] = y3_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t3_0 = y3_0 + hs * ((1/5)*k1_3_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = dirn * t3_0
        k2_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t3_0 = y3_0 + hs * ((3/40)*k1_3_0 + (9/40)*k2_3_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = dirn * t3_0
        k3_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t3_0 = y3_0 + hs * ((44/45)*k1_3_0 + (-56/15)*k2_3_0 + (32/9)*k3_3_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = dirn * t3_0
        k4_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t3_0 = y3_0 + hs * ((19372/6561)*k1_3_0 + (-25360/2187)*k2_3_0 + (64448/6561)*k3_3_0 + (-212/729)*k4_3_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = dirn * t3_0
        k5_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t3_0 = y3_0 + hs * ((9017/3168)*k1_3_0 + (-355/33)*k2_3_0 + (46732/5247)*k3_3_0 + (49/176)*k4_3_0 + (-5103/18656)*k5_3_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = dirn * t3_0
        k6_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n3_0 = y3_0 + hs * ((35/384)*k1_3_0 + (500/1113)*k3_3_0 + (125/192)*k4_3_0 + (-2187/6784)*k5_3_0 + (11/84)*k6_3_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = dirn * n3_0
        k7_3_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0 + a3 * n3_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        d3 = (71/57600)*k1_3_0 + (-71/16695)*k3_3_0 + (71/1920)*k4_3_0 + (-17253/339200)*k5_3_0 + (22/525)*k6_3_0 + (-1/40)*k7_3_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag), abs(y3_0.real), abs(y3_0.imag), abs(n3_0.real), abs(n3_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y3_0 = n3_0
        k1_3_0 = k7_3_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag, y3_0.real * y3_0.real + y3_0.imag * y3_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            y3_0 *= inv
            k1_3_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k4_p1_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y1_0 = Y0[1, 0]
    y2_0 = Y0[2, 0]
    y3_0 = Y0[3, 0]
    s_0 = S0[0]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
    a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = dirn * y3_0
    k1_3_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0 + a3 * y3_0
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 1, 0] = y1_0
            outY[ns, 2, 0] = y2_0
            outY[ns, 3, 0] = y3_0
            outS[ns, 0] = s_0
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t3_0 = y3_0 + hs * ((1/5)*k1_3_0)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = dirn * t3_0
        k2_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t3_0 = y3_0 + hs * ((3/40)*k1_3_0 + (9/40)*k2_3_0)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = dirn * t3_0
        k3_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t3_0 = y3_0 + hs * ((44/45)*k1_3_0 + (-56/15)*k2_3_0 + (32/9)*k3_3_0)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = dirn * t3_0
        k4_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t3_0 = y3_0 + hs * ((19372/6561)*k1_3_0 + (-25360/2187)*k2_3_0 + (64448/6561)*k3_3_0 + (-212/729)*k4_3_0)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = dirn * t3_0
        k5_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t3_0 = y3_0 + hs * ((9017/3168)*k1_3_0 + (-355/33)*k2_3_0 + (46732/5247)*k3_3_0 + (49/176)*k4_3_0 + (-5103/18656)*k5_3_0)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = dirn * t3_0
        k6_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n3_0 = y3_0 + hs * ((35/384)*k1_3_0 + (500/1113)*k3_3_0 + (125/192)*k4_3_0 + (-2187/6784)*k5_3_0 + (11/84)*k6_3_0)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = dirn * n3_0
        k7_3_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0 + a3 * n3_0
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        d3 = (71/57600)*k1_3_0 + (-71/16695)*k3_3_0 + (71/1920)*k4_3_0 + (-17253/339200)*k5_3_0 + (22/525)*k6_3_0 + (-1/40)*k7_3_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag), abs(y3_0.real), abs(y3_0.imag), abs(n3_0.real), abs(n3_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y3_0 = n3_0
        k1_3_0 = k7_3_0
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag, y3_0.real * y3_0.real + y3_0.imag * y3_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            y3_0 *= inv
            k1_3_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k4_p4_ep(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y0_2 = Y0[0, 2]
    y0_3 = Y0[0, 3]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    y1_2 = Y0[1, 2]
    y1_3 = Y0[1, 3]
    y2_0 = Y0[2, 0]
    y2_1 = Y0[2, 1]
    y2_2 = Y0[2, 2]
    y2_3 = Y0[2, 3]
    y3_0 = Y0[3, 0]
    y3_1 = Y0[3, 1]
    y3_2 = Y0[3, 2]
    y3_3 = Y0[3, 3]
    s_0 = S0[0]
    s_1 = S0[1]
    s_2 = S0[2]
    s_3 = S0[3]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
    a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
    a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
    a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = dirn * y3_0
    k1_3_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0 + a3 * y3_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = dirn * y2_1
    k1_2_1 = dirn * y3_1
    k1_3_1 = a0 * y0_1 + a1 * y1_1 + a2 * y2_1 + a3 * y3_1
    k1_0_2 = dirn * y1_2
    k1_1_2 = dirn * y2_2
    k1_2_2 = dirn * y3_2
    k1_3_2 = a0 * y0_2 + a1 * y1_2 + a2 * y2_2 + a3 * y3_2
    k1_0_3 = dirn * y1_3
    k1_1_3 = dirn * y2_3
    k1_2_3 = dirn * y3_3
    k1_3_3 = a0 * y0_3 + a1 * y1_3 + a2 * y2_3 + a3 * y3_3
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 0, 2] = y0_2
            outY[ns, 0, 3] = y0_3
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outY[ns, 1, 2] = y1_2
            outY[ns, 1, 3] = y1_3
            outY[ns, 2, 0] = y2_0
            outY[ns, 2, 1] = y2_1
            outY[ns, 2, 2] = y2_2
            outY[ns, 2, 3] = y2_3
            outY[ns, 3, 0] = y3_0
            outY[ns, 3, 1] = y3_1
            outY[ns, 3, 2] = y3_2
            outY[ns, 3, 3] = y3_3
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
            outS[ns, 2] = s_2
            outS[ns, 3] = s_3
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t0_2 = y0_2 + hs * ((1/5)*k1_0_2)
        t0_3 = y0_3 + hs * ((1/5)*k1_0_3)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        t1_2 = y1_2 + hs * ((1/5)*k1_1_2)
        t1_3 = y1_3 + hs * ((1/5)*k1_1_3)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t2_1 = y2_1 + hs * ((1/5)*k1_2_1)
        t2_2 = y2_2 + hs * ((1/5)*k1_2_2)
        t2_3 = y2_3 + hs * ((1/5)*k1_2_3)
        t3_0 = y3_0 + hs * ((1/5)*k1_3_0)
        t3_1 = y3_1 + hs * ((1/5)*k1_3_1)
        t3_2 = y3_2 + hs * ((1/5)*k1_3_2)
        t3_3 = y3_3 + hs * ((1/5)*k1_3_3)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = dirn * t3_0
        k2_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = dirn * t2_1
        k2_2_1 = dirn * t3_1
        k2_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k2_0_2 = dirn * t1_2
        k2_1_2 = dirn * t2_2
        k2_2_2 = dirn * t3_2
        k2_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k2_0_3 = dirn * t1_3
        k2_1_3 = dirn * t2_3
        k2_2_3 = dirn * t3_3
        k2_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t0_2 = y0_2 + hs * ((3/40)*k1_0_2 + (9/40)*k2_0_2)
        t0_3 = y0_3 + hs * ((3/40)*k1_0_3 + (9/40)*k2_0_3)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        t1_2 = y1_2 + hs * ((3/40)*k1_1_2 + (9/40)*k2_1_2)
        t1_3 = y1_3 + hs * ((3/40)*k1_1_3 + (9/40)*k2_1_3)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t2_1 = y2_1 + hs * ((3/40)*k1_2_1 + (9/40)*k2_2_1)
        t2_2 = y2_2 + hs * ((3/40)*k1_2_2 + (9/40)*k2_2_2)
        t2_3 = y2_3 + hs * ((3/40)*k1_2_3 + (9/40)*k2_2_3)
        t3_0 = y3_0 + hs * ((3/40)*k1_3_0 + (9/40)*k2_3_0)
        t3_1 = y3_1 + hs * ((3/40)*k1_3_1 + (9/40)*k2_3_1)
        t3_2 = y3_2 + hs * ((3/40)*k1_3_2 + (9/40)*k2_3_2)
        t3_3 = y3_3 + hs * ((3/40)*k1_3_3 + (9/40)*k2_3_3)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = dirn * t3_0
        k3_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = dirn * t2_1
        k3_2_1 = dirn * t3_1
        k3_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k3_0_2 = dirn * t1_2
        k3_1_2 = dirn * t2_2
        k3_2_2 = dirn * t3_2
        k3_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k3_0_3 = dirn * t1_3
        k3_1_3 = dirn * t2_3
        k3_2_3 = dirn * t3_3
        k3_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t0_2 = y0_2 + hs * ((44/45)*k1_0_2 + (-56/15)*k2_0_2 + (32/9)*k3_0_2)
        t0_3 = y0_3 + hs * ((44/45)*k1_0_3 + (-56/15)*k2_0_3 + (32/9)*k3_0_3)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        t1_2 = y1_2 + hs * ((44/45)*k1_1_2 + (-56/15)*k2_1_2 + (32/9)*k3_1_2)
        t1_3 = y1_3 + hs * ((44/45)*k1_1_3 + (-56/15)*k2_1_3 + (32/9)*k3_1_3)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t2_1 = y2_1 + hs * ((44/45)*k1_2_1 + (-56/15)*k2_2_1 + (32/9)*k3_2_1)
        t2_2 = y2_2 + hs * ((44/45)*k1_2_2 + (-56/15)*k2_2_2 + (32/9)*k3_2_2)
        t2_3 = y2_3 + hs * ((44/45)*k1_2_3 + (-56/15)*k2_2_3 + (32/9)*k3_2_3)
        t3_0 = y3_0 + hs * ((44/45)*k1_3_0 + (-56/15)*k2_3_0 + (32/9)*k3_3_0)
        t3_1 = y3_1 + hs * ((44/45)*k1_3_1 + (-56/15)*k2_3_1 + (32/9)*k3_3_1)
        t3_2 = y3_2 + hs * ((44/45)*k1_3_2 + (-56/15)*k2_3_2 + (32/9)*k3_3_2)
        t3_3 = y3_3 + hs * ((44/45)*k1_3_3 + (-56/15)*k2_3_3 + (32/9)*k3_3_3)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = dirn * t3_0
        k4_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = dirn * t2_1
        k4_2_1 = dirn * t3_1
        k4_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k4_0_2 = dirn * t1_2
        k4_1_2 = dirn * t2_2
        k4_2_2 = dirn * t3_2
        k4_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k4_0_3 = dirn * t1_3
        k4_1_3 = dirn * t2_3
        k4_2_3 = dirn * t3_3
        k4_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t0_2 = y0_2 + hs * ((19372/6561)*k1_0_2 + (-25360/2187)*k2_0_2 + (64448/6561)*k3_0_2 + (-212/729)*k4_0_2)
        t0_3 = y0_3 + hs * ((19372/6561)*k1_0_3 + (-25360/2187)*k2_0_3 + (64448/6561)*k3_0_3 + (-212/729)*k4_0_3)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        t1_2 = y1_2 + hs * ((19372/6561)*k1_1_2 + (-25360/2187)*k2_1_2 + (64448/6561)*k3_1_2 + (-212/729)*k4_1_2)
        t1_3 = y1_3 + hs * ((19372/6561)*k1_1_3 + (-25360/2187)*k2_1_3 + (64448/6561)*k3_1_3 + (-212/729)*k4_1_3)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t2_1 = y2_1 + hs * ((19372/6561)*k1_2_1 + (-25360/2187)*k2_2_1 + (64448/6561)*k3_2_1 + (-212/729)*k4_2_1)
        t2_2 = y2_2 + hs * ((19372/6561)*k1_2_2 + (-25360/2187)*k2_2_2 + (64448/6561)*k3_2_2 + (-212/729)*k4_2_2)
        t2_3 = y2_3 + hs * ((19372/6561)*k1_2_3 + (-25360/2187)*k2_2_3 + (64448/6561)*k3_2_3 + (-212/729)*k4_2_3)
        t3_0 = y3_0 + hs * ((19372/6561)*k1_3_0 + (-25360/2187)*k2_3_0 + (64448/6561)*k3_3_0 + (-212/729)*k4_3_0)
        t3_1 = y3_1 + hs * ((19372/6561)*k1_3_1 + (-25360/2187)*k2_3_1 + (64448/6561)*k3_3_1 + (-212/729)*k4_3_1)
        t3_2 = y3_2 + hs * ((19372/6561)*k1_3_2 + (-25360/2187)*k2_3_2 + (64448/6561)*k3_3_2 + (-212/729)*k4_3_2)
        t3_3 = y3_3 + hs * ((19372/6561)*k1_3_3 + (-25360/2187)*k2_3_3 + (64448/6561)*k3_3_3 + (-212/729)*k4_3_3)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = dirn * t3_0
        k5_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = dirn * t2_1
        k5_2_1 = dirn * t3_1
        k5_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k5_0_2 = dirn * t1_2
        k5_1_2 = dirn * t2_2
        k5_2_2 = dirn * t3_2
        k5_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k5_0_3 = dirn * t1_3
        k5_1_3 = dirn * t2_3
        k5_2_3 = dirn * t3_3
        k5_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t0_2 = y0_2 + hs * ((9017/3168)*k1_0_2 + (-355/33)*k2_0_2 + (46732/5247)*k3_0_2 + (49/176)*k4_0_2 + (-5103/18656)*k5_0_2)
        t0_3 = y0_3 + hs * ((9017/3168)*k1_0_3 + (-355/33)*k2_0_3 + (46732/5247)*k3_0_3 + (49/176)*k4_0_3 + (-5103/18656)*k5_0_3)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        t1_2 = y1_2 + hs * ((9017/3168)*k1_1_2 + (-355/33)*k2_1_2 + (46732/5247)*k3_1_2 + (49/176)*k4_1_2 + (-5103/18656)*k5_1_2)
        t1_3 = y1_3 + hs * ((9017/3168)*k1_1_3 + (-355/33)*k2_1_3 + (46732/5247)*k3_1_3 + (49/176)*k4_1_3 + (-5103/18656)*k5_1_3)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t2_1 = y2_1 + hs * ((9017/3168)*k1_2_1 + (-355/33)*k2_2_1 + (46732/5247)*k3_2_1 + (49/176)*k4_2_1 + (-5103/18656)*k5_2_1)
        t2_2 = y2_2 + hs * ((9017/3168)*k1_2_2 + (-355/33)*k2_2_2 + (46732/5247)*k3_2_2 + (49/176)*k4_2_2 + (-5103/18656)*k5_2_2)
        t2_3 = y2_3 + hs * ((9017/3168)*k1_2_3 + (-355/33)*k2_2_3 + (46732/5247)*k3_2_3 + (49/176)*k4_2_3 + (-5103/18656)*k5_2_3)
        t3_0 = y3_0 + hs * ((9017/3168)*k1_3_0 + (-355/33)*k2_3_0 + (46732/5247)*k3_3_0 + (49/176)*k4_3_0 + (-5103/18656)*k5_3_0)
        t3_1 = y3_1 + hs * ((9017/3168)*k1_3_1 + (-355/33)*k2_3_1 + (46732/5247)*k3_3_1 + (49/176)*k4_3_1 + (-5103/18656)*k5_3_1)
        t3_2 = y3_2 + hs * ((9017/3168)*k1_3_2 + (-355/33)*k2_3_2 + (46732/5247)*k3_3_2 + (49/176)*k4_3_2 + (-5103/18656)*k5_3_2)
        t3_3 = y3_3 + hs * ((9017/3168)*k1_3_3 + (-355/33)*k2_3_3 + (46732/5247)*k3_3_3 + (49/176)*k4_3_3 + (-5103/18656)*k5_3_3)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * coef_expoly(tc, tp, te, toff, 0, z)
        a1 = -dirn * coef_expoly(tc, tp, te, toff, 1, z)
        a2 = -dirn * coef_expoly(tc, tp, te, toff, 2, z)
        a3 = -dirn * coef_expoly(tc, tp, te, toff, 3, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = dirn * t3_0
        k6_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = dirn * t2_1
        k6_2_1 = dirn * t3_1
        k6_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k6_0_2 = dirn * t1_2
        k6_1_2 = dirn * t2_2
        k6_2_2 = dirn * t3_2
        k6_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k6_0_3 = dirn * t1_3
        k6_1_3 = dirn * t2_3
        k6_2_3 = dirn * t3_3
        k6_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n0_2 = y0_2 + hs * ((35/384)*k1_0_2 + (500/1113)*k3_0_2 + (125/192)*k4_0_2 + (-2187/6784)*k5_0_2 + (11/84)*k6_0_2)
        n0_3 = y0_3 + hs * ((35/384)*k1_0_3 + (500/1113)*k3_0_3 + (125/192)*k4_0_3 + (-2187/6784)*k5_0_3 + (11/84)*k6_0_3)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        n1_2 = y1_2 + hs * ((35/384)*k1_1_2 + (500/1113)*k3_1_2 + (125/192)*k4_1_2 + (-2187/6784)*k5_1_2 + (11/84)*k6_1_2)
        n1_3 = y1_3 + hs * ((35/384)*k1_1_3 + (500/1113)*k3_1_3 + (125/192)*k4_1_3 + (-2187/6784)*k5_1_3 + (11/84)*k6_1_3)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n2_1 = y2_1 + hs * ((35/384)*k1_2_1 + (500/1113)*k3_2_1 + (125/192)*k4_2_1 + (-2187/6784)*k5_2_1 + (11/84)*k6_2_1)
        n2_2 = y2_2 + hs * ((35/384)*k1_2_2 + (500/1113)*k3_2_2 + (125/192)*k4_2_2 + (-2187/6784)*k5_2_2 + (11/84)*k6_2_2)
        n2_3 = y2_3 + hs * ((35/384)*k1_2_3 + (500/1113)*k3_2_3 + (125/192)*k4_2_3 + (-2187/6784)*k5_2_3 + (11/84)*k6_2_3)
        n3_0 = y3_0 + hs * ((35/384)*k1_3_0 + (500/1113)*k3_3_0 + (125/192)*k4_3_0 + (-2187/6784)*k5_3_0 + (11/84)*k6_3_0)
        n3_1 = y3_1 + hs * ((35/384)*k1_3_1 + (500/1113)*k3_3_1 + (125/192)*k4_3_1 + (-2187/6784)*k5_3_1 + (11/84)*k6_3_1)
        n3_2 = y3_2 + hs * ((35/384)*k1_3_2 + (500/1113)*k3_3_2 + (125/192)*k4_3_2 + (-2187/6784)*k5_3_2 + (11/84)*k6_3_2)
        n3_3 = y3_3 + hs * ((35/384)*k1_3_3 + (500/1113)*k3_3_3 + (125/192)*k4_3_3 + (-2187/6784)*k5_3_3 + (11/84)*k6_3_3)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = dirn * n3_0
        k7_3_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0 + a3 * n3_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = dirn * n2_1
        k7_2_1 = dirn * n3_1
        k7_3_1 = a0 * n0_1 + a1 * n1_1 + a2 * n2_1 + a3 * n3_1
        k7_0_2 = dirn * n1_2
        k7_1_2 = dirn * n2_2
        k7_2_2 = dirn * n3_2
        k7_3_2 = a0 * n0_2 + a1 * n1_2 + a2 * n2_2 + a3 * n3_2
        k7_0_3 = dirn * n1_3
        k7_1_3 = dirn * n2_3
        k7_2_3 = dirn * n3_3
        k7_3_3 = a0 * n0_3 + a1 * n1_3 + a2 * n2_3 + a3 * n3_3
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        d3 = (71/57600)*k1_3_0 + (-71/16695)*k3_3_0 + (71/1920)*k4_3_0 + (-17253/339200)*k5_3_0 + (22/525)*k6_3_0 + (-1/40)*k7_3_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag), abs(y3_0.real), abs(y3_0.imag), abs(n3_0.real), abs(n3_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        d2 = (71/57600)*k1_2_1 + (-71/16695)*k3_2_1 + (71/1920)*k4_2_1 + (-17253/339200)*k5_2_1 + (22/525)*k6_2_1 + (-1/40)*k7_2_1
        d3 = (71/57600)*k1_3_1 + (-71/16695)*k3_3_1 + (71/1920)*k4_3_1 + (-17253/339200)*k5_3_1 + (22/525)*k6_3_1 + (-1/40)*k7_3_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag), abs(y2_1.real), abs(y2_1.imag), abs(n2_1.real), abs(n2_1.imag), abs(y3_1.real), abs(y3_1.imag), abs(n3_1.real), abs(n3_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_2 + (-71/16695)*k3_0_2 + (71/1920)*k4_0_2 + (-17253/339200)*k5_0_2 + (22/525)*k6_0_2 + (-1/40)*k7_0_2
        d1 = (71/57600)*k1_1_2 + (-71/16695)*k3_1_2 + (71/1920)*k4_1_2 + (-17253/339200)*k5_1_2 + (22/525)*k6_1_2 + (-1/40)*k7_1_2
        d2 = (71/57600)*k1_2_2 + (-71/16695)*k3_2_2 + (71/1920)*k4_2_2 + (-17253/339200)*k5_2_2 + (22/525)*k6_2_2 + (-1/40)*k7_2_2
        d3 = (71/57600)*k1_3_2 + (-71/16695)*k3_3_2 + (71/1920)*k4_3_2 + (-17253/339200)*k5_3_2 + (22/525)*k6_3_2 + (-1/40)*k7_3_2
        sc = max(abs(y0_2.real), abs(y0_2.imag), abs(n0_2.real), abs(n0_2.imag), abs(y1_2.real), abs(y1_2.imag), abs(n1_2.real), abs(n1_2.imag), abs(y2_2.real), abs(y2_2.imag), abs(n2_2.real), abs(n2_2.imag), abs(y3_2.real), abs(y3_2.imag), abs(n3_2.real), abs(n3_2.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_3 + (-71/16695)*k3_0_3 + (71/1920)*k4_0_3 + (-17253/339200)*k5_0_3 + (22/525)*k6_0_3 + (-1/40)*k7_0_3
        d1 = (71/57600)*k1_1_3 + (-71/16695)*k3_1_3 + (71/1920)*k4_1_3 + (-17253/339200)*k5_1_3 + (22/525)*k6_1_3 + (-1/40)*k7_1_3
        d2 = (71/57600)*k1_2_3 + (-71/16695)*k3_2_3 + (71/1920)*k4_2_3 + (-17253/339200)*k5_2_3 + (22/525)*k6_2_3 + (-1/40)*k7_2_3
        d3 = (71/57600)*k1_3_3 + (-71/16695)*k3_3_3 + (71/1920)*k4_3_3 + (-17253/339200)*k5_3_3 + (22/525)*k6_3_3 + (-1/40)*k7_3_3
        sc = max(abs(y0_3.real), abs(y0_3.imag), abs(n0_3.real), abs(n0_3.imag), abs(y1_3.real), abs(y1_3.imag), abs(n1_3.real), abs(n1_3.imag), abs(y2_3.real), abs(y2_3.imag), abs(n2_3.real), abs(n2_3.imag), abs(y3_3.real), abs(y3_3.imag), abs(n3_3.real), abs(n3_3.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y0_2 = n0_2
        k1_0_2 = k7_0_2
        y0_3 = n0_3
        k1_0_3 = k7_0_3
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        y1_2 = n1_2
        k1_1_2 = k7_1_2
        y1_3 = n1_3
        k1_1_3 = k7_1_3
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y2_1 = n2_1
        k1_2_1 = k7_2_1
        y2_2 = n2_2
        k1_2_2 = k7_2_2
        y2_3 = n2_3
        k1_2_3 = k7_2_3
        y3_0 = n3_0
        k1_3_0 = k7_3_0
        y3_1 = n3_1
        k1_3_1 = k7_3_1
        y3_2 = n3_2
        k1_3_2 = k7_3_2
        y3_3 = n3_3
        k1_3_3 = k7_3_3
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag, y3_0.real * y3_0.real + y3_0.imag * y3_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            y3_0 *= inv
            k1_3_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag, y2_1.real * y2_1.real + y2_1.imag * y2_1.imag, y3_1.real * y3_1.real + y3_1.imag * y3_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            y2_1 *= inv
            k1_2_1 *= inv
            y3_1 *= inv
            k1_3_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
        m2 = max(y0_2.real * y0_2.real + y0_2.imag * y0_2.imag, y1_2.real * y1_2.real + y1_2.imag * y1_2.imag, y2_2.real * y2_2.real + y2_2.imag * y2_2.imag, y3_2.real * y3_2.real + y3_2.imag * y3_2.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_2 *= inv
            k1_0_2 *= inv
            y1_2 *= inv
            k1_1_2 *= inv
            y2_2 *= inv
            k1_2_2 *= inv
            y3_2 *= inv
            k1_3_2 *= inv
            s_2 += math.log(mg)
            renorm[2] += 1
        m2 = max(y0_3.real * y0_3.real + y0_3.imag * y0_3.imag, y1_3.real * y1_3.real + y1_3.imag * y1_3.imag, y2_3.real * y2_3.real + y2_3.imag * y2_3.imag, y3_3.real * y3_3.real + y3_3.imag * y3_3.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_3 *= inv
            k1_0_3 *= inv
            y1_3 *= inv
            k1_1_3 *= inv
            y2_3 *= inv
            k1_2_3 *= inv
            y3_3 *= inv
            k1_3_3 *= inv
            s_3 += math.log(mg)
            renorm[3] += 1
    return r, steps, status, ns

@njit(cache=True, nogil=True, fastmath=_FM)
def dp45_k4_p4_st(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):
    stack = np.empty(64, np.complex128)
    y0_0 = Y0[0, 0]
    y0_1 = Y0[0, 1]
    y0_2 = Y0[0, 2]
    y0_3 = Y0[0, 3]
    y1_0 = Y0[1, 0]
    y1_1 = Y0[1, 1]
    y1_2 = Y0[1, 2]
    y1_3 = Y0[1, 3]
    y2_0 = Y0[2, 0]
    y2_1 = Y0[2, 1]
    y2_2 = Y0[2, 2]
    y2_3 = Y0[2, 3]
    y3_0 = Y0[3, 0]
    y3_1 = Y0[3, 1]
    y3_2 = Y0[3, 2]
    y3_3 = Y0[3, 3]
    s_0 = S0[0]
    s_1 = S0[1]
    s_2 = S0[2]
    s_3 = S0[3]
    nr = radii.shape[0]
    r = 0.0
    h = h0
    steps = 0
    ns = 0
    status = 0
    z = z0
    a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
    a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
    a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
    a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
    k1_0_0 = dirn * y1_0
    k1_1_0 = dirn * y2_0
    k1_2_0 = dirn * y3_0
    k1_3_0 = a0 * y0_0 + a1 * y1_0 + a2 * y2_0 + a3 * y3_0
    k1_0_1 = dirn * y1_1
    k1_1_1 = dirn * y2_1
    k1_2_1 = dirn * y3_1
    k1_3_1 = a0 * y0_1 + a1 * y1_1 + a2 * y2_1 + a3 * y3_1
    k1_0_2 = dirn * y1_2
    k1_1_2 = dirn * y2_2
    k1_2_2 = dirn * y3_2
    k1_3_2 = a0 * y0_2 + a1 * y1_2 + a2 * y2_2 + a3 * y3_2
    k1_0_3 = dirn * y1_3
    k1_1_3 = dirn * y2_3
    k1_2_3 = dirn * y3_3
    k1_3_3 = a0 * y0_3 + a1 * y1_3 + a2 * y2_3 + a3 * y3_3
    while True:
        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):
            outY[ns, 0, 0] = y0_0
            outY[ns, 0, 1] = y0_1
            outY[ns, 0, 2] = y0_2
            outY[ns, 0, 3] = y0_3
            outY[ns, 1, 0] = y1_0
            outY[ns, 1, 1] = y1_1
            outY[ns, 1, 2] = y1_2
            outY[ns, 1, 3] = y1_3
            outY[ns, 2, 0] = y2_0
            outY[ns, 2, 1] = y2_1
            outY[ns, 2, 2] = y2_2
            outY[ns, 2, 3] = y2_3
            outY[ns, 3, 0] = y3_0
            outY[ns, 3, 1] = y3_1
            outY[ns, 3, 2] = y3_2
            outY[ns, 3, 3] = y3_3
            outS[ns, 0] = s_0
            outS[ns, 1] = s_1
            outS[ns, 2] = s_2
            outS[ns, 3] = s_3
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
        t0_0 = y0_0 + hs * ((1/5)*k1_0_0)
        t0_1 = y0_1 + hs * ((1/5)*k1_0_1)
        t0_2 = y0_2 + hs * ((1/5)*k1_0_2)
        t0_3 = y0_3 + hs * ((1/5)*k1_0_3)
        t1_0 = y1_0 + hs * ((1/5)*k1_1_0)
        t1_1 = y1_1 + hs * ((1/5)*k1_1_1)
        t1_2 = y1_2 + hs * ((1/5)*k1_1_2)
        t1_3 = y1_3 + hs * ((1/5)*k1_1_3)
        t2_0 = y2_0 + hs * ((1/5)*k1_2_0)
        t2_1 = y2_1 + hs * ((1/5)*k1_2_1)
        t2_2 = y2_2 + hs * ((1/5)*k1_2_2)
        t2_3 = y2_3 + hs * ((1/5)*k1_2_3)
        t3_0 = y3_0 + hs * ((1/5)*k1_3_0)
        t3_1 = y3_1 + hs * ((1/5)*k1_3_1)
        t3_2 = y3_2 + hs * ((1/5)*k1_3_2)
        t3_3 = y3_3 + hs * ((1/5)*k1_3_3)
        z = z0 + (r + (1/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k2_0_0 = dirn * t1_0
        k2_1_0 = dirn * t2_0
        k2_2_0 = dirn * t3_0
        k2_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k2_0_1 = dirn * t1_1
        k2_1_1 = dirn * t2_1
        k2_2_1 = dirn * t3_1
        k2_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k2_0_2 = dirn * t1_2
        k2_1_2 = dirn * t2_2
        k2_2_2 = dirn * t3_2
        k2_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k2_0_3 = dirn * t1_3
        k2_1_3 = dirn * t2_3
        k2_2_3 = dirn * t3_3
        k2_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((3/40)*k1_0_0 + (9/40)*k2_0_0)
        t0_1 = y0_1 + hs * ((3/40)*k1_0_1 + (9/40)*k2_0_1)
        t0_2 = y0_2 + hs * ((3/40)*k1_0_2 + (9/40)*k2_0_2)
        t0_3 = y0_3 + hs * ((3/40)*k1_0_3 + (9/40)*k2_0_3)
        t1_0 = y1_0 + hs * ((3/40)*k1_1_0 + (9/40)*k2_1_0)
        t1_1 = y1_1 + hs * ((3/40)*k1_1_1 + (9/40)*k2_1_1)
        t1_2 = y1_2 + hs * ((3/40)*k1_1_2 + (9/40)*k2_1_2)
        t1_3 = y1_3 + hs * ((3/40)*k1_1_3 + (9/40)*k2_1_3)
        t2_0 = y2_0 + hs * ((3/40)*k1_2_0 + (9/40)*k2_2_0)
        t2_1 = y2_1 + hs * ((3/40)*k1_2_1 + (9/40)*k2_2_1)
        t2_2 = y2_2 + hs * ((3/40)*k1_2_2 + (9/40)*k2_2_2)
        t2_3 = y2_3 + hs * ((3/40)*k1_2_3 + (9/40)*k2_2_3)
        t3_0 = y3_0 + hs * ((3/40)*k1_3_0 + (9/40)*k2_3_0)
        t3_1 = y3_1 + hs * ((3/40)*k1_3_1 + (9/40)*k2_3_1)
        t3_2 = y3_2 + hs * ((3/40)*k1_3_2 + (9/40)*k2_3_2)
        t3_3 = y3_3 + hs * ((3/40)*k1_3_3 + (9/40)*k2_3_3)
        z = z0 + (r + (3/10) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k3_0_0 = dirn * t1_0
        k3_1_0 = dirn * t2_0
        k3_2_0 = dirn * t3_0
        k3_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k3_0_1 = dirn * t1_1
        k3_1_1 = dirn * t2_1
        k3_2_1 = dirn * t3_1
        k3_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k3_0_2 = dirn * t1_2
        k3_1_2 = dirn * t2_2
        k3_2_2 = dirn * t3_2
        k3_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k3_0_3 = dirn * t1_3
        k3_1_3 = dirn * t2_3
        k3_2_3 = dirn * t3_3
        k3_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((44/45)*k1_0_0 + (-56/15)*k2_0_0 + (32/9)*k3_0_0)
        t0_1 = y0_1 + hs * ((44/45)*k1_0_1 + (-56/15)*k2_0_1 + (32/9)*k3_0_1)
        t0_2 = y0_2 + hs * ((44/45)*k1_0_2 + (-56/15)*k2_0_2 + (32/9)*k3_0_2)
        t0_3 = y0_3 + hs * ((44/45)*k1_0_3 + (-56/15)*k2_0_3 + (32/9)*k3_0_3)
        t1_0 = y1_0 + hs * ((44/45)*k1_1_0 + (-56/15)*k2_1_0 + (32/9)*k3_1_0)
        t1_1 = y1_1 + hs * ((44/45)*k1_1_1 + (-56/15)*k2_1_1 + (32/9)*k3_1_1)
        t1_2 = y1_2 + hs * ((44/45)*k1_1_2 + (-56/15)*k2_1_2 + (32/9)*k3_1_2)
        t1_3 = y1_3 + hs * ((44/45)*k1_1_3 + (-56/15)*k2_1_3 + (32/9)*k3_1_3)
        t2_0 = y2_0 + hs * ((44/45)*k1_2_0 + (-56/15)*k2_2_0 + (32/9)*k3_2_0)
        t2_1 = y2_1 + hs * ((44/45)*k1_2_1 + (-56/15)*k2_2_1 + (32/9)*k3_2_1)
        t2_2 = y2_2 + hs * ((44/45)*k1_2_2 + (-56/15)*k2_2_2 + (32/9)*k3_2_2)
        t2_3 = y2_3 + hs * ((44/45)*k1_2_3 + (-56/15)*k2_2_3 + (32/9)*k3_2_3)
        t3_0 = y3_0 + hs * ((44/45)*k1_3_0 + (-56/15)*k2_3_0 + (32/9)*k3_3_0)
        t3_1 = y3_1 + hs * ((44/45)*k1_3_1 + (-56/15)*k2_3_1 + (32/9)*k3_3_1)
        t3_2 = y3_2 + hs * ((44/45)*k1_3_2 + (-56/15)*k2_3_2 + (32/9)*k3_3_2)
        t3_3 = y3_3 + hs * ((44/45)*k1_3_3 + (-56/15)*k2_3_3 + (32/9)*k3_3_3)
        z = z0 + (r + (4/5) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k4_0_0 = dirn * t1_0
        k4_1_0 = dirn * t2_0
        k4_2_0 = dirn * t3_0
        k4_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k4_0_1 = dirn * t1_1
        k4_1_1 = dirn * t2_1
        k4_2_1 = dirn * t3_1
        k4_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k4_0_2 = dirn * t1_2
        k4_1_2 = dirn * t2_2
        k4_2_2 = dirn * t3_2
        k4_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k4_0_3 = dirn * t1_3
        k4_1_3 = dirn * t2_3
        k4_2_3 = dirn * t3_3
        k4_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((19372/6561)*k1_0_0 + (-25360/2187)*k2_0_0 + (64448/6561)*k3_0_0 + (-212/729)*k4_0_0)
        t0_1 = y0_1 + hs * ((19372/6561)*k1_0_1 + (-25360/2187)*k2_0_1 + (64448/6561)*k3_0_1 + (-212/729)*k4_0_1)
        t0_2 = y0_2 + hs * ((19372/6561)*k1_0_2 + (-25360/2187)*k2_0_2 + (64448/6561)*k3_0_2 + (-212/729)*k4_0_2)
        t0_3 = y0_3 + hs * ((19372/6561)*k1_0_3 + (-25360/2187)*k2_0_3 + (64448/6561)*k3_0_3 + (-212/729)*k4_0_3)
        t1_0 = y1_0 + hs * ((19372/6561)*k1_1_0 + (-25360/2187)*k2_1_0 + (64448/6561)*k3_1_0 + (-212/729)*k4_1_0)
        t1_1 = y1_1 + hs * ((19372/6561)*k1_1_1 + (-25360/2187)*k2_1_1 + (64448/6561)*k3_1_1 + (-212/729)*k4_1_1)
        t1_2 = y1_2 + hs * ((19372/6561)*k1_1_2 + (-25360/2187)*k2_1_2 + (64448/6561)*k3_1_2 + (-212/729)*k4_1_2)
        t1_3 = y1_3 + hs * ((19372/6561)*k1_1_3 + (-25360/2187)*k2_1_3 + (64448/6561)*k3_1_3 + (-212/729)*k4_1_3)
        t2_0 = y2_0 + hs * ((19372/6561)*k1_2_0 + (-25360/2187)*k2_2_0 + (64448/6561)*k3_2_0 + (-212/729)*k4_2_0)
        t2_1 = y2_1 + hs * ((19372/6561)*k1_2_1 + (-25360/2187)*k2_2_1 + (64448/6561)*k3_2_1 + (-212/729)*k4_2_1)
        t2_2 = y2_2 + hs * ((19372/6561)*k1_2_2 + (-25360/2187)*k2_2_2 + (64448/6561)*k3_2_2 + (-212/729)*k4_2_2)
        t2_3 = y2_3 + hs * ((19372/6561)*k1_2_3 + (-25360/2187)*k2_2_3 + (64448/6561)*k3_2_3 + (-212/729)*k4_2_3)
        t3_0 = y3_0 + hs * ((19372/6561)*k1_3_0 + (-25360/2187)*k2_3_0 + (64448/6561)*k3_3_0 + (-212/729)*k4_3_0)
        t3_1 = y3_1 + hs * ((19372/6561)*k1_3_1 + (-25360/2187)*k2_3_1 + (64448/6561)*k3_3_1 + (-212/729)*k4_3_1)
        t3_2 = y3_2 + hs * ((19372/6561)*k1_3_2 + (-25360/2187)*k2_3_2 + (64448/6561)*k3_3_2 + (-212/729)*k4_3_2)
        t3_3 = y3_3 + hs * ((19372/6561)*k1_3_3 + (-25360/2187)*k2_3_3 + (64448/6561)*k3_3_3 + (-212/729)*k4_3_3)
        z = z0 + (r + (8/9) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k5_0_0 = dirn * t1_0
        k5_1_0 = dirn * t2_0
        k5_2_0 = dirn * t3_0
        k5_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k5_0_1 = dirn * t1_1
        k5_1_1 = dirn * t2_1
        k5_2_1 = dirn * t3_1
        k5_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k5_0_2 = dirn * t1_2
        k5_1_2 = dirn * t2_2
        k5_2_2 = dirn * t3_2
        k5_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k5_0_3 = dirn * t1_3
        k5_1_3 = dirn * t2_3
        k5_2_3 = dirn * t3_3
        k5_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        t0_0 = y0_0 + hs * ((9017/3168)*k1_0_0 + (-355/33)*k2_0_0 + (46732/5247)*k3_0_0 + (49/176)*k4_0_0 + (-5103/18656)*k5_0_0)
        t0_1 = y0_1 + hs * ((9017/3168)*k1_0_1 + (-355/33)*k2_0_1 + (46732/5247)*k3_0_1 + (49/176)*k4_0_1 + (-5103/18656)*k5_0_1)
        t0_2 = y0_2 + hs * ((9017/3168)*k1_0_2 + (-355/33)*k2_0_2 + (46732/5247)*k3_0_2 + (49/176)*k4_0_2 + (-5103/18656)*k5_0_2)
        t0_3 = y0_3 + hs * ((9017/3168)*k1_0_3 + (-355/33)*k2_0_3 + (46732/5247)*k3_0_3 + (49/176)*k4_0_3 + (-5103/18656)*k5_0_3)
        t1_0 = y1_0 + hs * ((9017/3168)*k1_1_0 + (-355/33)*k2_1_0 + (46732/5247)*k3_1_0 + (49/176)*k4_1_0 + (-5103/18656)*k5_1_0)
        t1_1 = y1_1 + hs * ((9017/3168)*k1_1_1 + (-355/33)*k2_1_1 + (46732/5247)*k3_1_1 + (49/176)*k4_1_1 + (-5103/18656)*k5_1_1)
        t1_2 = y1_2 + hs * ((9017/3168)*k1_1_2 + (-355/33)*k2_1_2 + (46732/5247)*k3_1_2 + (49/176)*k4_1_2 + (-5103/18656)*k5_1_2)
        t1_3 = y1_3 + hs * ((9017/3168)*k1_1_3 + (-355/33)*k2_1_3 + (46732/5247)*k3_1_3 + (49/176)*k4_1_3 + (-5103/18656)*k5_1_3)
        t2_0 = y2_0 + hs * ((9017/3168)*k1_2_0 + (-355/33)*k2_2_0 + (46732/5247)*k3_2_0 + (49/176)*k4_2_0 + (-5103/18656)*k5_2_0)
        t2_1 = y2_1 + hs * ((9017/3168)*k1_2_1 + (-355/33)*k2_2_1 + (46732/5247)*k3_2_1 + (49/176)*k4_2_1 + (-5103/18656)*k5_2_1)
        t2_2 = y2_2 + hs * ((9017/3168)*k1_2_2 + (-355/33)*k2_2_2 + (46732/5247)*k3_2_2 + (49/176)*k4_2_2 + (-5103/18656)*k5_2_2)
        t2_3 = y2_3 + hs * ((9017/3168)*k1_2_3 + (-355/33)*k2_2_3 + (46732/5247)*k3_2_3 + (49/176)*k4_2_3 + (-5103/18656)*k5_2_3)
        t3_0 = y3_0 + hs * ((9017/3168)*k1_3_0 + (-355/33)*k2_3_0 + (46732/5247)*k3_3_0 + (49/176)*k4_3_0 + (-5103/18656)*k5_3_0)
        t3_1 = y3_1 + hs * ((9017/3168)*k1_3_1 + (-355/33)*k2_3_1 + (46732/5247)*k3_3_1 + (49/176)*k4_3_1 + (-5103/18656)*k5_3_1)
        t3_2 = y3_2 + hs * ((9017/3168)*k1_3_2 + (-355/33)*k2_3_2 + (46732/5247)*k3_3_2 + (49/176)*k4_3_2 + (-5103/18656)*k5_3_2)
        t3_3 = y3_3 + hs * ((9017/3168)*k1_3_3 + (-355/33)*k2_3_3 + (46732/5247)*k3_3_3 + (49/176)*k4_3_3 + (-5103/18656)*k5_3_3)
        z = z0 + (r + (1) * hs) * dirn
        a0 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 0, z)
        a1 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 1, z)
        a2 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 2, z)
        a3 = -dirn * stack_eval(ops, oargs, consts, offs, stack, 3, z)
        k6_0_0 = dirn * t1_0
        k6_1_0 = dirn * t2_0
        k6_2_0 = dirn * t3_0
        k6_3_0 = a0 * t0_0 + a1 * t1_0 + a2 * t2_0 + a3 * t3_0
        k6_0_1 = dirn * t1_1
        k6_1_1 = dirn * t2_1
        k6_2_1 = dirn * t3_1
        k6_3_1 = a0 * t0_1 + a1 * t1_1 + a2 * t2_1 + a3 * t3_1
        k6_0_2 = dirn * t1_2
        k6_1_2 = dirn * t2_2
        k6_2_2 = dirn * t3_2
        k6_3_2 = a0 * t0_2 + a1 * t1_2 + a2 * t2_2 + a3 * t3_2
        k6_0_3 = dirn * t1_3
        k6_1_3 = dirn * t2_3
        k6_2_3 = dirn * t3_3
        k6_3_3 = a0 * t0_3 + a1 * t1_3 + a2 * t2_3 + a3 * t3_3
        n0_0 = y0_0 + hs * ((35/384)*k1_0_0 + (500/1113)*k3_0_0 + (125/192)*k4_0_0 + (-2187/6784)*k5_0_0 + (11/84)*k6_0_0)
        n0_1 = y0_1 + hs * ((35/384)*k1_0_1 + (500/1113)*k3_0_1 + (125/192)*k4_0_1 + (-2187/6784)*k5_0_1 + (11/84)*k6_0_1)
        n0_2 = y0_2 + hs * ((35/384)*k1_0_2 + (500/1113)*k3_0_2 + (125/192)*k4_0_2 + (-2187/6784)*k5_0_2 + (11/84)*k6_0_2)
        n0_3 = y0_3 + hs * ((35/384)*k1_0_3 + (500/1113)*k3_0_3 + (125/192)*k4_0_3 + (-2187/6784)*k5_0_3 + (11/84)*k6_0_3)
        n1_0 = y1_0 + hs * ((35/384)*k1_1_0 + (500/1113)*k3_1_0 + (125/192)*k4_1_0 + (-2187/6784)*k5_1_0 + (11/84)*k6_1_0)
        n1_1 = y1_1 + hs * ((35/384)*k1_1_1 + (500/1113)*k3_1_1 + (125/192)*k4_1_1 + (-2187/6784)*k5_1_1 + (11/84)*k6_1_1)
        n1_2 = y1_2 + hs * ((35/384)*k1_1_2 + (500/1113)*k3_1_2 + (125/192)*k4_1_2 + (-2187/6784)*k5_1_2 + (11/84)*k6_1_2)
        n1_3 = y1_3 + hs * ((35/384)*k1_1_3 + (500/1113)*k3_1_3 + (125/192)*k4_1_3 + (-2187/6784)*k5_1_3 + (11/84)*k6_1_3)
        n2_0 = y2_0 + hs * ((35/384)*k1_2_0 + (500/1113)*k3_2_0 + (125/192)*k4_2_0 + (-2187/6784)*k5_2_0 + (11/84)*k6_2_0)
        n2_1 = y2_1 + hs * ((35/384)*k1_2_1 + (500/1113)*k3_2_1 + (125/192)*k4_2_1 + (-2187/6784)*k5_2_1 + (11/84)*k6_2_1)
        n2_2 = y2_2 + hs * ((35/384)*k1_2_2 + (500/1113)*k3_2_2 + (125/192)*k4_2_2 + (-2187/6784)*k5_2_2 + (11/84)*k6_2_2)
        n2_3 = y2_3 + hs * ((35/384)*k1_2_3 + (500/1113)*k3_2_3 + (125/192)*k4_2_3 + (-2187/6784)*k5_2_3 + (11/84)*k6_2_3)
        n3_0 = y3_0 + hs * ((35/384)*k1_3_0 + (500/1113)*k3_3_0 + (125/192)*k4_3_0 + (-2187/6784)*k5_3_0 + (11/84)*k6_3_0)
        n3_1 = y3_1 + hs * ((35/384)*k1_3_1 + (500/1113)*k3_3_1 + (125/192)*k4_3_1 + (-2187/6784)*k5_3_1 + (11/84)*k6_3_1)
        n3_2 = y3_2 + hs * ((35/384)*k1_3_2 + (500/1113)*k3_3_2 + (125/192)*k4_3_2 + (-2187/6784)*k5_3_2 + (11/84)*k6_3_2)
        n3_3 = y3_3 + hs * ((35/384)*k1_3_3 + (500/1113)*k3_3_3 + (125/192)*k4_3_3 + (-2187/6784)*k5_3_3 + (11/84)*k6_3_3)
        k7_0_0 = dirn * n1_0
        k7_1_0 = dirn * n2_0
        k7_2_0 = dirn * n3_0
        k7_3_0 = a0 * n0_0 + a1 * n1_0 + a2 * n2_0 + a3 * n3_0
        k7_0_1 = dirn * n1_1
        k7_1_1 = dirn * n2_1
        k7_2_1 = dirn * n3_1
        k7_3_1 = a0 * n0_1 + a1 * n1_1 + a2 * n2_1 + a3 * n3_1
        k7_0_2 = dirn * n1_2
        k7_1_2 = dirn * n2_2
        k7_2_2 = dirn * n3_2
        k7_3_2 = a0 * n0_2 + a1 * n1_2 + a2 * n2_2 + a3 * n3_2
        k7_0_3 = dirn * n1_3
        k7_1_3 = dirn * n2_3
        k7_2_3 = dirn * n3_3
        k7_3_3 = a0 * n0_3 + a1 * n1_3 + a2 * n2_3 + a3 * n3_3
        err = 0.0
        d0 = (71/57600)*k1_0_0 + (-71/16695)*k3_0_0 + (71/1920)*k4_0_0 + (-17253/339200)*k5_0_0 + (22/525)*k6_0_0 + (-1/40)*k7_0_0
        d1 = (71/57600)*k1_1_0 + (-71/16695)*k3_1_0 + (71/1920)*k4_1_0 + (-17253/339200)*k5_1_0 + (22/525)*k6_1_0 + (-1/40)*k7_1_0
        d2 = (71/57600)*k1_2_0 + (-71/16695)*k3_2_0 + (71/1920)*k4_2_0 + (-17253/339200)*k5_2_0 + (22/525)*k6_2_0 + (-1/40)*k7_2_0
        d3 = (71/57600)*k1_3_0 + (-71/16695)*k3_3_0 + (71/1920)*k4_3_0 + (-17253/339200)*k5_3_0 + (22/525)*k6_3_0 + (-1/40)*k7_3_0
        sc = max(abs(y0_0.real), abs(y0_0.imag), abs(n0_0.real), abs(n0_0.imag), abs(y1_0.real), abs(y1_0.imag), abs(n1_0.real), abs(n1_0.imag), abs(y2_0.real), abs(y2_0.imag), abs(n2_0.real), abs(n2_0.imag), abs(y3_0.real), abs(y3_0.imag), abs(n3_0.real), abs(n3_0.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_1 + (-71/16695)*k3_0_1 + (71/1920)*k4_0_1 + (-17253/339200)*k5_0_1 + (22/525)*k6_0_1 + (-1/40)*k7_0_1
        d1 = (71/57600)*k1_1_1 + (-71/16695)*k3_1_1 + (71/1920)*k4_1_1 + (-17253/339200)*k5_1_1 + (22/525)*k6_1_1 + (-1/40)*k7_1_1
        d2 = (71/57600)*k1_2_1 + (-71/16695)*k3_2_1 + (71/1920)*k4_2_1 + (-17253/339200)*k5_2_1 + (22/525)*k6_2_1 + (-1/40)*k7_2_1
        d3 = (71/57600)*k1_3_1 + (-71/16695)*k3_3_1 + (71/1920)*k4_3_1 + (-17253/339200)*k5_3_1 + (22/525)*k6_3_1 + (-1/40)*k7_3_1
        sc = max(abs(y0_1.real), abs(y0_1.imag), abs(n0_1.real), abs(n0_1.imag), abs(y1_1.real), abs(y1_1.imag), abs(n1_1.real), abs(n1_1.imag), abs(y2_1.real), abs(y2_1.imag), abs(n2_1.real), abs(n2_1.imag), abs(y3_1.real), abs(y3_1.imag), abs(n3_1.real), abs(n3_1.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_2 + (-71/16695)*k3_0_2 + (71/1920)*k4_0_2 + (-17253/339200)*k5_0_2 + (22/525)*k6_0_2 + (-1/40)*k7_0_2
        d1 = (71/57600)*k1_1_2 + (-71/16695)*k3_1_2 + (71/1920)*k4_1_2 + (-17253/339200)*k5_1_2 + (22/525)*k6_1_2 + (-1/40)*k7_1_2
        d2 = (71/57600)*k1_2_2 + (-71/16695)*k3_2_2 + (71/1920)*k4_2_2 + (-17253/339200)*k5_2_2 + (22/525)*k6_2_2 + (-1/40)*k7_2_2
        d3 = (71/57600)*k1_3_2 + (-71/16695)*k3_3_2 + (71/1920)*k4_3_2 + (-17253/339200)*k5_3_2 + (22/525)*k6_3_2 + (-1/40)*k7_3_2
        sc = max(abs(y0_2.real), abs(y0_2.imag), abs(n0_2.real), abs(n0_2.imag), abs(y1_2.real), abs(y1_2.imag), abs(n1_2.real), abs(n1_2.imag), abs(y2_2.real), abs(y2_2.imag), abs(n2_2.real), abs(n2_2.imag), abs(y3_2.real), abs(y3_2.imag), abs(n3_2.real), abs(n3_2.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
        if sc > 0.0:
            err = max(err, hs * e / (tol * sc))
        elif e > 0.0:
            err = math.inf
        d0 = (71/57600)*k1_0_3 + (-71/16695)*k3_0_3 + (71/1920)*k4_0_3 + (-17253/339200)*k5_0_3 + (22/525)*k6_0_3 + (-1/40)*k7_0_3
        d1 = (71/57600)*k1_1_3 + (-71/16695)*k3_1_3 + (71/1920)*k4_1_3 + (-17253/339200)*k5_1_3 + (22/525)*k6_1_3 + (-1/40)*k7_1_3
        d2 = (71/57600)*k1_2_3 + (-71/16695)*k3_2_3 + (71/1920)*k4_2_3 + (-17253/339200)*k5_2_3 + (22/525)*k6_2_3 + (-1/40)*k7_2_3
        d3 = (71/57600)*k1_3_3 + (-71/16695)*k3_3_3 + (71/1920)*k4_3_3 + (-17253/339200)*k5_3_3 + (22/525)*k6_3_3 + (-1/40)*k7_3_3
        sc = max(abs(y0_3.real), abs(y0_3.imag), abs(n0_3.real), abs(n0_3.imag), abs(y1_3.real), abs(y1_3.imag), abs(n1_3.real), abs(n1_3.imag), abs(y2_3.real), abs(y2_3.imag), abs(n2_3.real), abs(n2_3.imag), abs(y3_3.real), abs(y3_3.imag), abs(n3_3.real), abs(n3_3.imag))
        e = max(abs(d0.real), abs(d0.imag), abs(d1.real), abs(d1.imag), abs(d2.real), abs(d2.imag), abs(d3.real), abs(d3.imag))
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
        y0_0 = n0_0
        k1_0_0 = k7_0_0
        y0_1 = n0_1
        k1_0_1 = k7_0_1
        y0_2 = n0_2
        k1_0_2 = k7_0_2
        y0_3 = n0_3
        k1_0_3 = k7_0_3
        y1_0 = n1_0
        k1_1_0 = k7_1_0
        y1_1 = n1_1
        k1_1_1 = k7_1_1
        y1_2 = n1_2
        k1_1_2 = k7_1_2
        y1_3 = n1_3
        k1_1_3 = k7_1_3
        y2_0 = n2_0
        k1_2_0 = k7_2_0
        y2_1 = n2_1
        k1_2_1 = k7_2_1
        y2_2 = n2_2
        k1_2_2 = k7_2_2
        y2_3 = n2_3
        k1_2_3 = k7_2_3
        y3_0 = n3_0
        k1_3_0 = k7_3_0
        y3_1 = n3_1
        k1_3_1 = k7_3_1
        y3_2 = n3_2
        k1_3_2 = k7_3_2
        y3_3 = n3_3
        k1_3_3 = k7_3_3
        m2 = max(y0_0.real * y0_0.real + y0_0.imag * y0_0.imag, y1_0.real * y1_0.real + y1_0.imag * y1_0.imag, y2_0.real * y2_0.real + y2_0.imag * y2_0.imag, y3_0.real * y3_0.real + y3_0.imag * y3_0.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_0 *= inv
            k1_0_0 *= inv
            y1_0 *= inv
            k1_1_0 *= inv
            y2_0 *= inv
            k1_2_0 *= inv
            y3_0 *= inv
            k1_3_0 *= inv
            s_0 += math.log(mg)
            renorm[0] += 1
        m2 = max(y0_1.real * y0_1.real + y0_1.imag * y0_1.imag, y1_1.real * y1_1.real + y1_1.imag * y1_1.imag, y2_1.real * y2_1.real + y2_1.imag * y2_1.imag, y3_1.real * y3_1.real + y3_1.imag * y3_1.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_1 *= inv
            k1_0_1 *= inv
            y1_1 *= inv
            k1_1_1 *= inv
            y2_1 *= inv
            k1_2_1 *= inv
            y3_1 *= inv
            k1_3_1 *= inv
            s_1 += math.log(mg)
            renorm[1] += 1
        m2 = max(y0_2.real * y0_2.real + y0_2.imag * y0_2.imag, y1_2.real * y1_2.real + y1_2.imag * y1_2.imag, y2_2.real * y2_2.real + y2_2.imag * y2_2.imag, y3_2.real * y3_2.real + y3_2.imag * y3_2.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_2 *= inv
            k1_0_2 *= inv
            y1_2 *= inv
            k1_1_2 *= inv
            y2_2 *= inv
            k1_2_2 *= inv
            y3_2 *= inv
            k1_3_2 *= inv
            s_2 += math.log(mg)
            renorm[2] += 1
        m2 = max(y0_3.real * y0_3.real + y0_3.imag * y0_3.imag, y1_3.real * y1_3.real + y1_3.imag * y1_3.imag, y2_3.real * y2_3.real + y2_3.imag * y2_3.imag, y3_3.real * y3_3.real + y3_3.imag * y3_3.imag)
        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):
            mg = math.sqrt(m2)
            inv = 1.0 / mg
            y0_3 *= inv
            k1_0_3 *= inv
            y1_3 *= inv
            k1_1_3 *= inv
            y2_3 *= inv
            k1_2_3 *= inv
            y3_3 *= inv
            k1_3_3 *= inv
            s_3 += math.log(mg)
            renorm[3] += 1
    return r, steps, status, ns

KERNELS = {
    (1, 1, 'ep'): dp45_k1_p1_ep,
    (1, 1, 'st'): dp45_k1_p1_st,
    (2, 1, 'ep'): dp45_k2_p1_ep,
    (2, 1, 'st'): dp45_k2_p1_st,
    (2, 2, 'ep'): dp45_k2_p2_ep,
    (2, 2, 'st'): dp45_k2_p2_st,
    (3, 1, 'ep'): dp45_k3_p1_ep,
    (3, 1, 'st'): dp45_k3_p1_st,
    (3, 3, 'ep'): dp45_k3_p3_ep,
    (3, 3, 'st'): dp45_k3_p3_st,
    (4, 1, 'ep'): dp45_k4_p1_ep,
    (4, 1, 'st'): dp45_k4_p1_st,
    (4, 4, 'ep'): dp45_k4_p4_ep,
    (4, 4, 'st'): dp45_k4_p4_st,
}
