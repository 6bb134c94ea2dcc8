"""Solve for X in W(sl2)^0[2]: d-closed, basic, exactly conformal."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from chiralis.weil import WeilAlgebra, Convention
from chiralis.lie import sl2
from chiralis.linalg import SparseMatrixQ
from chiralis.expr import format_state
from chiralis.core import State, ONE

sys.path.insert(0, ".")
from scratch_bigL2 import enumerate_piece, w, alg, lie  # reuse engine setup

n = lie.dim
piece = enumerate_piece(0, 2)
print("dim W(sl2)^0[2] =", len(piece))
basis = [State(alg, {m: ONE}) for m in piece]
gens = [alg.gen(g.name) for g in alg.gens]

entries = {}
rhsv = {}
rowid = 0


def add_rows(vecs, target):
    global rowid
    monos = set(target.terms)
    for v in vecs:
        monos.update(v.terms)
    for mono in sorted(monos):
        for j, v in enumerate(vecs):
            c = v.terms.get(mono)
            if c:
                entries[(rowid, j)] = c
        t = target.terms.get(mono)
        if t:
            rhsv[rowid] = t
        rowid += 1


# (i) d X = 0
add_rows([w.d(bs) for bs in basis], alg.zero())
# (ii) horizontal, (iii) invariant: p = 0..2
for i in range(n):
    for p in range(0, 3):
        add_rows([alg.circle(w.b(i), p, bs) for bs in basis], alg.zero())
        add_rows([alg.circle(w.theta_w[i], p, bs) for bs in basis], alg.zero())
# (iv) exact conformal action on generators
for s in gens:
    wt = alg.mono_weight(next(iter(s.terms)))
    for p, target in ((0, alg.derivative(s)), (1, wt * s),
                      (2, alg.zero()), (3, alg.zero())):
        add_rows([alg.circle(bs, p, s) for bs in basis], target)

M = SparseMatrixQ(rowid, len(basis), entries)
sol = M.solve(rhsv)
print("exactly-conformal basic closed X exists:", sol is not None)

if sol is None:
    # drop (iv): basic closed X with X o_n = L^W o_n modulo exact is the theorem;
    # check the closed basic subspace dimension instead
    entries.clear(); rhsv.clear(); rowid = 0
    add_rows([w.d(bs) for bs in basis], alg.zero())
    for i in range(n):
        for p in range(0, 3):
            add_rows([alg.circle(w.b(i), p, bs) for bs in basis], alg.zero())
            add_rows([alg.circle(w.theta_w[i], p, bs) for bs in basis], alg.zero())
    M2 = SparseMatrixQ(rowid, len(basis), entries)
    null = M2.nullspace()
    print("dim of closed basic subspace at (0,2):", len(null))
    for v in null:
        st = alg.zero()
        for j, c in v.items():
            st = st + c * basis[j]
        print("  basic closed:", format_state(st)[:220])
else:
    X = alg.zero()
    for j, c in sol.items():
        X = X + c * basis[j]
    print("X =", format_state(X))
