"""Pin the action convention of the chiral de Rham fixtures (no sign freedom there)."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.engine import FreeFieldAlgebra, GeneratorSpec
from chiralis.lie import sl2, sl2_fundamental
from chiralis.expr import format_state

lie = sl2()
rep = sl2_fundamental(lie)
nv = rep.dim_v
gens = []
for i in range(nv):
    gens.append(GeneratorSpec(f"b{{{i+1}}}", 1, 1, -1))
    gens.append(GeneratorSpec(f"c{{{i+1}}}", 1, 0, 1, aux=1))
    gens.append(GeneratorSpec(f"beta{{{i+1}}}", 0, 1, 0))
    gens.append(GeneratorSpec(f"gamma{{{i+1}}}", 0, 0, 0, aux=1))
contr = {}
for i in range(nv):
    contr[(f"b{{{i+1}}}", f"c{{{i+1}}}")] = Fraction(1)
    contr[(f"beta{{{i+1}}}", f"gamma{{{i+1}}}")] = Fraction(1)
alg = FreeFieldAlgebra("Q(V)", gens, contr)

b = [alg.gen(f"b{{{i+1}}}") for i in range(nv)]
c = [alg.gen(f"c{{{i+1}}}") for i in range(nv)]
be = [alg.gen(f"beta{{{i+1}}}") for i in range(nv)]
ga = [alg.gen(f"gamma{{{i+1}}}") for i in range(nv)]

dQ = alg.zero()
for i in range(nv):
    dQ = dQ + alg.wick(be[i], c[i])

# sanity: chiral de Rham differential acts as exterior derivative at weight 0
assert alg.circle(dQ, 0, ga[0]) == c[0]
assert alg.circle(dQ, 0, alg.circle(dQ, 0, alg.wick(ga[0], ga[1]))).is_zero()


def iota(vec):
    # iota_xi = -xi_{ij} gamma^i b^j,  rho(xi)x_i = xi_{ij} x_j  (xi_{ij} = M[j][i])
    m = rep.rho(vec)
    out = alg.zero()
    for i in range(nv):
        for j in range(nv):
            if m[j][i]:
                out = out - m[j][i] * alg.wick(ga[i], b[j])
    return out


def L_of(vec):
    return alg.circle(dQ, 0, iota(vec))


for a in range(3):
    for h in range(3):
        xa, xh = lie.basis_vec(a), lie.basis_vec(h)
        br = lie.bracket(xa, xh)
        lhs = alg.circle(L_of(xa), 0, iota(xh))
        if lhs == iota(br):
            rel = "+[xi,eta]  (homomorphism)"
        elif lhs == iota(tuple(-x for x in br)):
            rel = "-[xi,eta]  (anti)"
        else:
            rel = "NEITHER: " + format_state(lhs)
        print(lie.basis[a], lie.basis[h], "->", rel)

# closure of L itself
ok = all(
    alg.circle(L_of(lie.basis_vec(a)), 0, L_of(lie.basis_vec(h))) == L_of(lie.bracket(lie.basis_vec(a), lie.basis_vec(h)))
    for a in range(3) for h in range(3)
)
print("L closure honest:", ok)
ok2 = all(
    alg.circle(L_of(lie.basis_vec(a)), 0, L_of(lie.basis_vec(h))) == L_of(tuple(-x for x in lie.bracket(lie.basis_vec(a), lie.basis_vec(h))))
    for a in range(3) for h in range(3)
)
print("L closure anti:", ok2)
print("L o1 L level:", [format_state(alg.circle(L_of(lie.basis_vec(a)), 1, L_of(lie.basis_vec(h))))
                        for a in range(3) for h in range(3)])
# trace form comparison: <xi,eta> = tr(rho xi rho eta)
tf = rep.trace_form()
print("trace form:", [[str(x) for x in row] for row in tf])
