"""Generate unrolled Dormand-Prince ray kernels for small ODE orders.

Run from the repository root:

    python3 tools/gen_kernels.py > src/abgrowth/odes/_kernels.py

The generic array kernel in ``abgrowth.odes.kernel`` covers any order; the
generated ones keep every state component in a scalar local, which is about
twice as fast for the orders the verification suite uses.
"""
import sys

# (k, p) pairs to emit: a single column for scalar IVPs, k columns for bases.
PAIRS = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3), (4, 1), (4, 4)]
# coefficient forms: exp-poly terms or a postfix stack program.  Separate
# variants keep the fast path free of any reference to the interpreter.
FORMS = ("ep", "st")

A = [
    [],
    ["1/5"],
    ["3/40", "9/40"],
    ["44/45", "-56/15", "32/9"],
    ["19372/6561", "-25360/2187", "64448/6561", "-212/729"],
    ["9017/3168", "-355/33", "46732/5247", "49/176", "-5103/18656"],
    ["35/384", "0", "500/1113", "125/192", "-2187/6784", "11/84"],
]
C = ["0", "1/5", "3/10", "4/5", "8/9", "1", "1"]
E = ["71/57600", "0", "-71/16695", "71/1920", "-17253/339200", "22/525", "-1/40"]

HEADER = '''"""Unrolled Dormand-Prince 5(4) ray kernels (generated by tools/gen_kernels.py).

Do not edit by hand; regenerate instead.
"""
import math

import numpy as np
from numba import njit

from .kernel import coef_expoly, stack_eval

# value-safe flags only: inf/nan must survive for the step-rejection logic
_FM = {"contract", "arcp", "nsz", "reassoc"}


'''


def _comb(weights, stage_vars):
    terms = [f"({w})*{v}" for w, v in zip(weights, stage_vars) if w != "0"]
    return " + ".join(terms)


def render(k, p, form):
    ys = [[f"y{j}_{c}" for c in range(p)] for j in range(k)]
    L = []
    w = L.append
    name = f"dp45_k{k}_p{p}_{form}"
    if form == "ep":
        call = "coef_expoly(tc, tp, te, toff, {j}, z)"
    else:
        call = "stack_eval(ops, oargs, consts, offs, stack, {j}, z)"
    w("@njit(cache=True, nogil=True, fastmath=_FM)")
    w(f"def {name}(tc, tp, te, toff, ops, oargs, consts, offs, Y0, S0, z0, dirn, radii, tol, budget, h0, outY, outS, renorm):")
    w("    stack = np.empty(64, np.complex128)")
    for j in range(k):
        for c in range(p):
            w(f"    {ys[j][c]} = Y0[{j}, {c}]")
    for c in range(p):
        w(f"    s_{c} = S0[{c}]")
    w("    nr = radii.shape[0]")
    w("    r = 0.0")
    w("    h = h0")
    w("    steps = 0")
    w("    ns = 0")
    w("    status = 0")
    # stage-1 slopes
    w("    z = z0")
    for j in range(k):
        w(f"    a{j} = -dirn * {call.format(j=j)}")
    _emit_rhs(w, k, p, "1", ys)
    w("    while True:")
    w("        if ns < nr and radii[ns] - r <= 1e-14 * max(1.0, radii[ns]):")
    for j in range(k):
        for c in range(p):
            w(f"            outY[ns, {j}, {c}] = {ys[j][c]}")
    for c in range(p):
        w(f"            outS[ns, {c}] = s_{c}")
    w("            ns += 1")
    w("            continue")
    w("        if ns == nr:")
    w("            status = 0")
    w("            break")
    w("        if steps >= budget:")
    w("            status = 1")
    w("            break")
    w("        target = radii[ns]")
    w("        hs = h")
    w("        clipped = False")
    w("        if r + hs >= target:")
    w("            hs = target - r")
    w("            clipped = True")
    for s in range(1, 7):
        prev = [f"k{q + 1}_{{j}}_{{c}}" for q in range(s)]
        target_vars = "t" if s < 6 else "n"
        for j in range(k):
            for c in range(p):
                stage = [v.format(j=j, c=c) for v in prev]
                w(f"        {target_vars}{j}_{c} = {ys[j][c]} + hs * ({_comb(A[s], stage)})")
        if s < 6:
            # the last stage shares its abscissa with stage 6, so coefficients are reused
            w(f"        z = z0 + (r + ({C[s]}) * hs) * dirn")
            for j in range(k):
                w(f"        a{j} = -dirn * {call.format(j=j)}")
        src = [[f"{target_vars}{j}_{c}" for c in range(p)] for j in range(k)]
        _emit_rhs(w, k, p, str(s + 1), src)
    # error estimate, per column, normwise relative
    w("        err = 0.0")
    for c in range(p):
        comps = []
        scs = []
        for j in range(k):
            stage = [f"k{q + 1}_{j}_{c}" for q in range(7)]
            w(f"        d{j} = {_comb(E, stage)}")
            comps += [f"abs(d{j}.real)", f"abs(d{j}.imag)"]
            scs += [f"abs({ys[j][c]}.real)", f"abs({ys[j][c]}.imag)", f"abs(n{j}_{c}.real)", f"abs(n{j}_{c}.imag)"]
        w(f"        sc = max({', '.join(scs)})" if len(scs) > 1 else f"        sc = {scs[0]}")
        w(f"        e = max({', '.join(comps)})")
        w("        if sc > 0.0:")
        w("            err = max(err, hs * e / (tol * sc))")
        w("        elif e > 0.0:")
        w("            err = math.inf")
    w("        if not (err <= 1.0):")
    w("            if err != err or err == math.inf:")
    w("                h = 0.2 * hs")
    w("            else:")
    w("                h = hs * max(0.2, 0.9 * err ** -0.2)")
    w("            if h < 1e-13 * max(1.0, r):")
    w("                status = 2")
    w("                break")
    w("            continue")
    w("        steps += 1")
    w("        if clipped:")
    w("            r = target")
    w("        else:")
    w("            r = r + hs")
    w("            h = hs * min(5.0, 0.9 * err ** -0.2) if err > 0.0 else 5.0 * hs")
    for j in range(k):
        for c in range(p):
            w(f"        {ys[j][c]} = n{j}_{c}")
            w(f"        k1_{j}_{c} = k7_{j}_{c}")
    for c in range(p):
        mags = [f"{ys[j][c]}.real * {ys[j][c]}.real + {ys[j][c]}.imag * {ys[j][c]}.imag" for j in range(k)]
        w(f"        m2 = max({', '.join(mags)})" if k > 1 else f"        m2 = {mags[0]}")
        w("        if m2 > 0.0 and (m2 >= 7.38905609893065 or m2 < 1.0):")
        w("            mg = math.sqrt(m2)")
        w("            inv = 1.0 / mg")
        for j in range(k):
            w(f"            {ys[j][c]} *= inv")
            w(f"            k1_{j}_{c} *= inv")
        w(f"            s_{c} += math.log(mg)")
        w(f"            renorm[{c}] += 1")
    w("    return r, steps, status, ns")
    w("")
    w("")
    return "\n".join(L)


def _emit_rhs(w, k, p, tag, src):
    # companion system scaled by the ray direction: (y1, ..., y_{k-1}, -sum A_j y_j) * dirn
    for c in range(p):
        for j in range(k - 1):
            w(f"    {'    ' if tag != '1' else ''}k{tag}_{j}_{c} = dirn * {src[j + 1][c]}")
        acc = " + ".join(f"a{j} * {src[j][c]}" for j in range(k))
        w(f"    {'    ' if tag != '1' else ''}k{tag}_{k - 1}_{c} = {acc}")


def main():
    out = [HEADER]
    for k, p in PAIRS:
        for form in FORMS:
            out.append(render(k, p, form))
    out.append("KERNELS = {\n")
    for k, p in PAIRS:
        for form in FORMS:
            out.append(f"    ({k}, {p}, {form!r}): dp45_k{k}_p{p}_{form},\n")
    out.append("}\n")
    sys.stdout.write("".join(out))


if __name__ == "__main__":
    main()
