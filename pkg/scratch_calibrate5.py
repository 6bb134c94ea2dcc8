"""Verify the honest Weil package: D = -K - 1/2 T_bcc - T_bgc, all identities."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention
from chiralis.lie import sl2, t_abelian
from chiralis.expr import format_state

conv = Convention(bc=Fraction(-1), betagamma=Fraction(1), d_sign=-1,
                  theta_e_sign=-1, theta_s_sign=-1)


class Raw(WeilAlgebra):
    def _pin_differential(self, lam):
        return Fraction(0), self.alg.zero()


for lie in (t_abelian(1), t_abelian(2), sl2()):
    w = Raw(lie, convention=conv)
    alg = w.alg
    n = lie.dim
    K = alg.zero()
    T_bcc = alg.zero()
    T_bgc = alg.zero()
    for i in range(n):
        K = K + alg.wick(w.gamma(i), w.b(i))
        for j in range(n):
            for k in range(n):
                fij = lie.f[i][j][k]
                if fij:
                    T_bcc = T_bcc + fij * alg.wick(w.b(k), alg.wick(w.c(i), w.c(j)))
                    T_bgc = T_bgc + fij * alg.wick(w.beta(k), alg.wick(w.gamma(i), w.c(j)))
    D = -K - Fraction(1, 2) * T_bcc - T_bgc
    d = lambda s: alg.circle(D, 0, s)

    # nesting comparison against the spec ansatz shapes
    A_S = alg.zero(); A_E = alg.zero(); B_S = alg.zero(); B_E = alg.zero()
    for i in range(n):
        A_S = A_S + alg.wick(w.c(i), w.theta_s[i])
        A_E = A_E + alg.wick(w.c(i), w.theta_e[i])
        B_S = B_S + alg.wick(w.theta_s[i], w.c(i))
        B_E = B_E + alg.wick(w.theta_e[i], w.c(i))
    R = D + K  # cubic part
    for lbl, X, Y in (("c-left", A_S, A_E), ("theta-left", B_S, B_E)):
        found = None
        for x in (Fraction(1), Fraction(-1)):
            for yn in (-2, -1, 1, 2):
                for yd in (1, 2):
                    y = Fraction(yn, yd)
                    if R == x * X + y * Y:
                        found = (x, y)
        print(f"{lie.name}: cubic part == x*{lbl}(Theta_S) + y*{lbl}(Theta_E):", found)

    gens = [w.b(i) for i in range(n)] + [w.c(i) for i in range(n)] + \
           [w.beta(i) for i in range(n)] + [w.gamma(i) for i in range(n)]

    # printed identities, engine orientation
    ok = True
    for i in range(n):
        want = w.gamma(i)
        wantg = alg.zero()
        for j in range(n):
            br = lie.bracket(w.dual[i], lie.basis_vec(j))  # [xi, xi_j] order
            want = want + Fraction(-1, 2) * alg.wick(w.c_of(br), w.c(j))
            wantg = wantg + alg.wick(w.gamma_of(br), w.c(j))
        if d(w.c(i)) != want:
            ok = False
            print("  dc mismatch", i, format_state(d(w.c(i))), "|", format_state(want))
        if d(w.gamma(i)) != wantg:
            ok = False
            print("  dgamma mismatch", i)
        if d(w.b(i)) != w.theta_w[i]:
            ok = False
            print("  [d,b]=Theta mismatch", i)
        if lie.is_abelian() and d(w.beta(i)) != w.b(i):
            ok = False
            print("  dbeta mismatch", i)
    print(f"{lie.name}: printed identities (bracket [xi,xi_j]):", ok)

    # q identity
    u = alg.zero(); wq = alg.zero()
    for i in range(n):
        for j in range(n):
            if lie.B[i][j]:
                u = u + lie.B[i][j] * alg.wick(w.gamma(i), alg.derivative(w.c(j)))
                wq = wq + lie.B[i][j] * alg.wick(w.gamma(i), alg.derivative(w.gamma(j)))
    print(f"{lie.name}: d(gamma dc) = gamma dgamma:", d(u) == wq)

    # d^2 on generators, currents, and depth-2 monomials
    probes = gens + w.theta_w + [u, alg.wick(w.b(0), alg.derivative(w.gamma(0))),
                                 alg.wick(w.beta(0), alg.wick(w.c(0), w.gamma(0)))]
    bad = [format_state(d(d(s)))[:50] for s in probes if not d(d(s)).is_zero()]
    print(f"{lie.name}: d^2 = 0 probes:", "OK" if not bad else bad[:3])

    # conformal structure
    gW = alg.zero()
    for i in range(n):
        gW = gW + alg.wick(w.beta(i), alg.derivative(w.c(i)))
    LW = d(gW)
    tsb = alg.zero()
    for i in range(n):
        tsb = tsb + alg.wick(w.theta_s[i], w.b_vec(w.dual[i]))
    bigL = d(tsb + gW)
    okc = all(alg.circle(LW, 0, s) == alg.derivative(s) and
              alg.circle(LW, 1, s) == alg.mono_weight(next(iter(s.terms))) * s for s in gens)
    okb = all(alg.circle(bigL, 0, s) == alg.derivative(s) and
              alg.circle(bigL, 1, s) == alg.mono_weight(next(iter(s.terms))) * s for s in gens)
    print(f"{lie.name}: L^W conformal {okc}, bigL conformal {okb}")
    print(f"{lie.name}: Virasoro OPE of bigL:",
          alg.circle(bigL, 0, bigL) == alg.derivative(bigL),
          alg.circle(bigL, 1, bigL) == 2 * bigL,
          alg.circle(bigL, 2, bigL).is_zero(),
          "c/2 pole:", format_state(alg.circle(bigL, 3, bigL)))
    print(f"{lie.name}: b o_p gW:", [(p, format_state(s)) for p, s in alg.ope_singular(w.b(0), gW)])
    print(f"{lie.name}: d beta_1 =", format_state(d(w.beta(0))))
    print()
