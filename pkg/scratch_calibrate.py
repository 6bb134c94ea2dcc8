"""Sweep W(g) sign conventions against the paper-pinned identity suite."""
import itertools
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention, LAMBDA_CANDIDATES
from chiralis.lie import sl2, t_abelian
from chiralis.errors import NoValidDifferential
from chiralis.expr import format_state

F1, Fm1 = Fraction(1), Fraction(-1)
results = []
for bc, bg, sd, se, ss in itertools.product([F1, Fm1], [F1, Fm1], [1, -1], [1, -1], [1, -1]):
    conv = Convention(bc=bc, betagamma=bg, d_sign=sd, theta_e_sign=se, theta_s_sign=ss)
    for lie in (t_abelian(1), sl2()):
        try:
            w = WeilAlgebra(lie, convention=conv)
        except NoValidDifferential:
            break
        # conformal checks for L^W and bigL
        alg = w.alg
        ok = True
        for s in [w.b(0), w.c(0), w.beta(0), w.gamma(0), alg.gen("gamma{1}", -3)]:
            wt = alg.mono_weight(next(iter(s.terms)))
            if alg.circle(w.LW, 0, s) != alg.derivative(s) or alg.circle(w.LW, 1, s) != wt * s:
                ok = False
            if alg.circle(w.bigL, 0, s) != alg.derivative(s) or alg.circle(w.bigL, 1, s) != wt * s:
                ok = False
        # Virasoro OPE of bigL
        L = w.bigL
        if alg.circle(L, 0, L) != alg.derivative(L):
            ok = False
        if alg.circle(L, 1, L) != 2 * L:
            ok = False
        if not alg.circle(L, 2, L).is_zero():
            ok = False
        cc = w.central_charge()
        if cc != w.central_charge_oracle():
            ok = False
        # current closure
        n = lie.dim
        for i in range(n):
            for j in range(n):
                br = lie.bracket(lie.basis_vec(i), lie.basis_vec(j))
                if alg.circle(w.theta_w[i], 0, w.theta_w[j]) != w.theta_w_vec(br):
                    ok = False
                if not alg.circle(w.theta_w[i], 1, w.theta_w[j]).is_zero():
                    ok = False
        if not ok:
            break
    else:
        # record g^W pole sign
        w1 = WeilAlgebra(t_abelian(1), convention=conv)
        pole = w1.alg.ope_singular(w1.b(0), w1.gW)
        results.append((conv, w1.lam, [(p, format_state(s)) for p, s in pole]))

for conv, lam, pole in results:
    print(f"bc={conv.bc} betagamma={conv.betagamma} d_sign={conv.d_sign} "
          f"sE={conv.theta_e_sign} sS={conv.theta_s_sign} gw={conv.gw_sign} lam={lam} b.gW pole={pole}")
print(len(results), "surviving conventions")
