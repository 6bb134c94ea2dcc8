import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention
from chiralis.lie import sl2
from chiralis.expr import format_state

conv = Convention(bc=Fraction(-1), betagamma=Fraction(1), d_sign=-1,
                  theta_e_sign=-1, theta_s_sign=-1)
lie = sl2()


class Raw(WeilAlgebra):
    def _pin_differential(self, lam):
        return Fraction(0), self.alg.zero()


w = Raw(lie, convention=conv)
alg = w.alg
n = lie.dim

K = alg.zero()
for i in range(n):
    K = K + alg.wick(w.gamma(i), w.b(i))
T_bcc = alg.zero()
T_bgc = alg.zero()
for i in range(n):
    for j in range(n):
        for k in range(n):
            fij = lie.f[i][j][k]
            if fij:
                T_bcc = T_bcc + fij * alg.wick(w.b(k), alg.wick(w.c(i), w.c(j)))
                T_bgc = T_bgc + fij * alg.wick(w.beta(k), alg.wick(w.gamma(i), w.c(j)))


def want_dc(i):
    out = w.gamma(i)
    for j in range(n):
        br = lie.bracket(lie.basis_vec(j), w.dual[i])
        out = out + Fraction(-1, 2) * alg.wick(w.c_of(br), w.c(j))
    return out


def want_dg(i):
    out = alg.zero()
    for j in range(n):
        br = lie.bracket(lie.basis_vec(j), w.dual[i])
        out = out + alg.wick(w.gamma_of(br), w.c(j))
    return out


i = 0  # basis element e; dual e^ = f
print("target d c_1   :", format_state(want_dc(i)))
print("K(0) c_1       :", format_state(alg.circle(K, 0, w.c(i))))
print("Tbcc(0) c_1    :", format_state(alg.circle(T_bcc, 0, w.c(i))))
print("Tbgc(0) c_1    :", format_state(alg.circle(T_bgc, 0, w.c(i))))
print()
print("target d g_1   :", format_state(want_dg(i)))
print("K(0) g_1       :", format_state(alg.circle(K, 0, w.gamma(i))))
print("Tbcc(0) g_1    :", format_state(alg.circle(T_bcc, 0, w.gamma(i))))
print("Tbgc(0) g_1    :", format_state(alg.circle(T_bgc, 0, w.gamma(i))))
print()
print("target ThW_1   :", format_state(w.theta_w[0]))
print("K(0) b_1       :", format_state(alg.circle(K, 0, w.b(i))))
print("Tbcc(0) b_1    :", format_state(alg.circle(T_bcc, 0, w.b(i))))
print("Tbgc(0) b_1    :", format_state(alg.circle(T_bgc, 0, w.b(i))))
print()
print("K(0) beta_1    :", format_state(alg.circle(K, 0, w.beta(i))))
print("Tbcc(0) beta_1 :", format_state(alg.circle(T_bcc, 0, w.beta(i))))
print("Tbgc(0) beta_1 :", format_state(alg.circle(T_bgc, 0, w.beta(i))))
