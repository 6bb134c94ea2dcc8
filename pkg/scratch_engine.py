import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.engine import FreeFieldAlgebra, GeneratorSpec, binom
from chiralis.core import fock_multiply

# rank-1 bc-betagamma system, canonical contractions
alg = FreeFieldAlgebra(
    "W(t1)",
    [
        GeneratorSpec("b{1}", 1, 1, -1),
        GeneratorSpec("c{1}", 1, 0, 1),
        GeneratorSpec("beta{1}", 0, 1, -2),
        GeneratorSpec("gamma{1}", 0, 0, 2),
    ],
    {("b{1}", "c{1}"): Fraction(1), ("beta{1}", "gamma{1}"): Fraction(1)},
)
vac = alg.vacuum()
b, c, be, ga = (alg.gen(n) for n in ("b{1}", "c{1}", "beta{1}", "gamma{1}"))

# vacuum axioms
assert alg.circle(vac, -1, b + 2 * ga) == b + 2 * ga
assert alg.circle(b, -1, vac) == b
assert alg.circle(b, 0, vac).is_zero()
assert alg.circle(b, 5, vac).is_zero()

# contraction basics
assert alg.circle(b, 0, c) == vac
assert alg.circle(c, 0, b) == vac
assert alg.circle(be, 0, ga) == vac
assert alg.circle(ga, 0, be) == -vac
assert alg.apply_mode("beta{1}", 0, ga) == vac
assert alg.apply_mode("b{1}", 5, vac).is_zero()
assert alg.apply_mode("beta{1}", 1, alg.gen("gamma{1}", -2)) == vac

# derivative
assert alg.derivative(vac).is_zero()
assert alg.derivative(ga) == alg.gen("gamma{1}", -2)
gg = fock_multiply(ga, ga)
assert alg.derivative(gg) == 2 * fock_multiply(alg.gen("gamma{1}", -2), ga)
assert alg.derivative(gg) == alg.circle(gg, -2, vac)
assert alg.derivative(fock_multiply(b, c)) == alg.circle(fock_multiply(b, c), -2, vac)

# wick of single modes = concatenation
assert alg.wick(b, c) == fock_multiply(b, c)
assert alg.circle(c, -1, c).is_zero()

# grading
assert fock_multiply(b, c).grade() == (0, 1, 0)
assert gg.grade() == (4, 0, 0)
assert (b + ga).grade() is None

# random states for axiom sweeps
rng = random.Random(7)
pool = [b, c, be, ga, alg.gen("gamma{1}", -2), alg.gen("b{1}", -2),
        fock_multiply(b, c), fock_multiply(be, ga), fock_multiply(ga, c),
        alg.wick(be, alg.derivative(c)), alg.wick(b, alg.derivative(ga))]


def rand_state():
    s = pool[rng.randrange(len(pool))]
    if rng.random() < 0.4:
        s = s.scale(Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 2)))
    return s


def commutator_identity(a, m, bb, n, cc):
    lhs = alg.circle(a, m, alg.circle(bb, n, cc))
    pa, pb = a.parity(), bb.parity()
    sgn = -1 if (pa and pb) else 1
    lhs = lhs - sgn * alg.circle(bb, n, alg.circle(a, m, cc))
    rhs = alg.zero()
    for p in range(0, a.weight_max() + bb.weight_max()):
        ab = alg.circle(a, p, bb)
        if not ab.is_zero():
            rhs = rhs + Fraction(binom(m, p)) * alg.circle(ab, m + n - p, cc)
    return (lhs - rhs).is_zero()


ok = 0
for _ in range(300):
    a, bb, cc = rand_state(), rand_state(), rand_state()
    m, n = rng.randint(-3, 3), rng.randint(-3, 3)
    assert commutator_identity(a, m, bb, n, cc), (a, m, bb, n, cc)
    ok += 1
print("commutator identity OK on", ok, "samples")

# translation axioms
for _ in range(120):
    a, bb = rand_state(), rand_state()
    n = rng.randint(-3, 3)
    da = alg.derivative(a)
    assert alg.circle(da, n, bb) == Fraction(-n) * alg.circle(a, n - 1, bb)
    assert alg.derivative(alg.circle(a, n, bb)) == alg.circle(da, n, bb) + alg.circle(a, n, alg.derivative(bb))
print("translation axioms OK")

# supercommutativity/associativity of fock product
for _ in range(80):
    a, bb, cc = rand_state(), rand_state(), rand_state()
    sgn = -1 if (a.parity() and bb.parity()) else 1
    assert fock_multiply(a, bb) == sgn * fock_multiply(bb, a)
    assert fock_multiply(fock_multiply(a, bb), cc) == fock_multiply(a, fock_multiply(bb, cc))
print("fock product OK")

# skew symmetry of circle products
for _ in range(120):
    a, bb = rand_state(), rand_state()
    n = rng.randint(-2, 3)
    sgn = -1 if (a.parity() and bb.parity()) else 1
    rhs = alg.zero()
    d = alg.circle(bb, n, a)
    j = 0
    term = d
    import math
    while True:
        val = alg.circle(bb, n + j, a)
        if j > 8:
            break
        # sum_j (-1)^{n+j+1} partial^j/j! (b o_{n+j} a)
        cur = val
        for _k in range(j):
            cur = alg.derivative(cur)
        sj = -1 if (n + j + 1) % 2 else 1
        rhs = rhs + Fraction(sj, math.factorial(j)) * cur
        j += 1
    assert alg.circle(a, n, bb) == sgn * rhs, (a, n, bb)
print("skew symmetry OK")
print("all engine smoke tests passed")
