import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention
from chiralis.lie import sl2
from chiralis.expr import format_state

conv = Convention(bc=Fraction(-1), betagamma=Fraction(1), d_sign=-1,
                  theta_e_sign=-1, theta_s_sign=-1)


class Raw(WeilAlgebra):
    def _pin_differential(self, lam):
        n = self.lie.dim
        cur = self.alg.zero()
        for i in range(n):
            cur = cur + self.alg.wick(self.theta_s[i] + Fraction(1, 2) * self.theta_e[i], self.c(i))
            cur = cur + self.alg.wick(self.gamma(i), self.b(i))
        return Fraction(1, 2), -1 * cur


lie = sl2()
w = Raw(lie, convention=conv)
alg = w.alg
n = lie.dim
gens = [w.b(i) for i in range(n)] + [w.c(i) for i in range(n)] + \
       [w.beta(i) for i in range(n)] + [w.gamma(i) for i in range(n)]


def conformal_ok(L):
    return all(alg.circle(L, 0, s) == alg.derivative(s) and
               alg.circle(L, 1, s) == alg.mono_weight(next(iter(s.terms))) * s for s in gens)


def virasoro(L):
    return (alg.circle(L, 0, L) == alg.derivative(L),
            alg.circle(L, 1, L) == 2 * L,
            alg.circle(L, 2, L).is_zero(),
            format_state(alg.circle(L, 3, L)))


LW = w.d(w.gW)
print("LW conformal:", conformal_ok(LW), "virasoro:", virasoro(LW))

currents = {"S": w.theta_s, "E": w.theta_e, "W": w.theta_w}
for lbl, th in currents.items():
    for s in (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)):
        tsb = alg.zero()
        for i in range(n):
            tsb = tsb + alg.wick(th[i], w.b_vec(w.dual[i]))
        cand = w.d(s * tsb + w.gW)
        if conformal_ok(cand):
            print(f"bigL = d({s}*Theta_{lbl} b + gW): conformal; virasoro:", virasoro(cand))
# also b-left ordering
for lbl, th in currents.items():
    for s in (Fraction(1), Fraction(-1)):
        tsb = alg.zero()
        for i in range(n):
            tsb = tsb + alg.wick(w.b_vec(w.dual[i]), th[i])
        cand = w.d(s * tsb + w.gW)
        if conformal_ok(cand):
            print(f"bigL = d({s}* b Theta_{lbl}): conformal; virasoro:", virasoro(cand))
