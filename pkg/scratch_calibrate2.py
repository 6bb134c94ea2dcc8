import itertools
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention
from chiralis.lie import sl2, t_abelian
from chiralis.errors import NoValidDifferential
from chiralis.expr import format_state

F1, Fm1 = Fraction(1), Fraction(-1)


def diagnose(conv, lie):
    try:
        w = WeilAlgebra(lie, convention=conv)
    except NoValidDifferential as e:
        return f"no-lambda", None
    alg = w.alg
    msgs = []
    for nm, s in [("b", w.b(0)), ("c", w.c(0)), ("beta", w.beta(0)), ("gamma", w.gamma(0))]:
        wt = alg.mono_weight(next(iter(s.terms)))
        if alg.circle(w.LW, 0, s) != alg.derivative(s):
            msgs.append(f"LW.0.{nm}={format_state(alg.circle(w.LW,0,s))}")
        if alg.circle(w.LW, 1, s) != wt * s:
            msgs.append(f"LW.1.{nm}={format_state(alg.circle(w.LW,1,s))}")
    L = w.bigL
    if alg.circle(L, 0, L) != alg.derivative(L):
        msgs.append("Vir0")
    if alg.circle(L, 1, L) != 2 * L:
        msgs.append("Vir1")
    if not alg.circle(L, 2, L).is_zero():
        msgs.append("Vir2")
    if w.central_charge() != w.central_charge_oracle():
        msgs.append(f"cc={w.central_charge()}")
    n = lie.dim
    for i in range(n):
        for j in range(n):
            br = lie.bracket(lie.basis_vec(i), lie.basis_vec(j))
            if alg.circle(w.theta_w[i], 0, w.theta_w[j]) != w.theta_w_vec(br):
                msgs.append(f"closure{i}{j}")
            if not alg.circle(w.theta_w[i], 1, w.theta_w[j]).is_zero():
                msgs.append(f"level{i}{j}")
    return "checks: " + ("OK" if not msgs else "; ".join(msgs[:6])), w.lam


for bc, bg, sd, se, ss in itertools.product([F1, Fm1], [F1, Fm1], [1, -1], [1, -1], [1, -1]):
    conv = Convention(bc=bc, betagamma=bg, d_sign=sd, theta_e_sign=se, theta_s_sign=ss)
    r1, lam1 = diagnose(conv, t_abelian(1))
    tag = f"bc={bc} bg={bg} sd={sd} se={se} ss={ss}"
    if r1 == "no-lambda":
        continue
    r2, lam2 = diagnose(conv, sl2())
    print(tag, "| t1:", r1, "| sl2:", r2, f"lam={lam2}")
