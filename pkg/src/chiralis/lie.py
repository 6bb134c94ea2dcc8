"""Lie-algebra inputs: structure constants, bilinear forms, dual bases, reps.

All paper formulas written with orthonormal bases are realized downstream
with dual-basis pairs (xi_i, xi^i); orthonormal bases for e.g. the sl2 trace
form would require irrational entries, dual bases keep everything rational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import ZERO, ONE
from .errors import DegenerateForm, InvalidLieData, NotFaithful, NotSemisimple
from .linalg import SparseMatrixQ, dense_rank
from .report import Check, VerificationReport

Vec = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, str) and "/" in x:
        n, d = x.split("/")
        return Fraction(int(n), int(d))
    return Fraction(x)


@dataclass(frozen=True)
class LieAlgebraData:
    """Structure constants f[i][j][k] and invariant bilinear form B[i][j]."""

    name: str
    basis: tuple[str, ...]
    f: tuple  # f[i][j][k]: coefficient of xi_k in [xi_i, xi_j]
    B: tuple  # B[i][j] = B(xi_i, xi_j)
    semisimple: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            for j in range(n):
                yj = y[j]
                if not yj:
                    continue
                fij = self.f[i][j]
                for k in range(n):
                    if fij[k]:
                        out[k] += xi * yj * fij[k]
        return tuple(out)

    def basis_vec(self, i: int) -> Vec:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def form(self, x: Vec, y: Vec) -> Fraction:
        return sum(
            (x[i] * y[j] * self.B[i][j] for i in range(self.dim) for j in range(self.dim)),
            ZERO,
        )

    def is_abelian(self) -> bool:
        return all(not v for plane in self.f for row in plane for v in row)

    def ad_matrix(self, i: int) -> list[list[Fraction]]:
        """Matrix of ad(xi_i): column j holds [xi_i, xi_j] in basis coordinates."""
        return [[self.f[i][j][k] for j in range(self.dim)] for k in range(self.dim)]

    def killing_form(self) -> list[list[Fraction]]:
        n = self.dim
        ads = [self.ad_matrix(i) for i in range(n)]
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[i][j] = sum((ads[i][a][b] * ads[j][b][a] for a in range(n) for b in range(n)), ZERO)
        return out

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "f": [
                [i, j, k, self.f[i][j][k].numerator, self.f[i][j][k].denominator]
                for i in range(self.dim)
                for j in range(self.dim)
                for k in range(self.dim)
                if self.f[i][j][k]
            ],
            "B": [
                [i, j, self.B[i][j].numerator, self.B[i][j].denominator]
                for i in range(self.dim)
                for j in range(self.dim)
                if self.B[i][j]
            ],
            "semisimple": self.semisimple,
        }


@dataclass(frozen=True)
class RepresentationData:
    """Matrices rho_i acting on V, with the induced trace form tr(rho_i rho_j)."""

    name: str
    lie: LieAlgebraData
    matrices: tuple  # matrices[i][r][c]

    @property
    def dim_v(self) -> int:
        return len(self.matrices[0])

    def rho(self, vec: Vec) -> list[list[Fraction]]:
        n = self.dim_v
        out = [[ZERO] * n for _ in range(n)]
        for i, coef in enumerate(vec):
            if not coef:
                continue
            mi = self.matrices[i]
            for r in range(n):
                for c in range(n):
                    if mi[r][c]:
                        out[r][c] += coef * mi[r][c]
        return out

    def trace_form(self) -> list[list[Fraction]]:
        n = self.lie.dim
        v = self.dim_v
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[i][j] = sum(
                    (self.matrices[i][r][c] * self.matrices[j][c][r] for r in range(v) for c in range(v)),
                    ZERO,
                )
        return out

    def is_faithful(self) -> bool:
        cols = {}
        v = self.dim_v
        for i in range(self.lie.dim):
            for r in range(v):
                for c in range(v):
                    if self.matrices[i][r][c]:
                        cols[(r * v + c, i)] = self.matrices[i][r][c]
        m = SparseMatrixQ(v * v, self.lie.dim, cols)
        return m.rank() == self.lie.dim


def validate_lie(data: LieAlgebraData) -> VerificationReport:
    """Check antisymmetry, Jacobi, form symmetry and invariance, exactly."""
    checks = []
    n = data.dim
    bad = [
        (i, j, k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if data.f[i][j][k] != -data.f[j][i][k]
    ]
    checks.append(Check("antisymmetry", "f[i][j] = -f[j][i]", not bad, str(bad[:4])))

    jac = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                x, y, z = (data.basis_vec(t) for t in (i, j, k))
                s = tuple(
                    a + b + c
                    for a, b, c in zip(
                        data.bracket(x, data.bracket(y, z)),
                        data.bracket(y, data.bracket(z, x)),
                        data.bracket(z, data.bracket(x, y)),
                    )
                )
                if any(s):
                    jac.append((i, j, k))
    checks.append(Check("jacobi", "Jacobi identity on all basis triples", not jac, str(jac[:4])))

    sym = [(i, j) for i in range(n) for j in range(n) if data.B[i][j] != data.B[j][i]]
    checks.append(Check("form-symmetric", "B symmetric", not sym, str(sym[:4])))

    inv = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = (data.basis_vec(t) for t in (i, j, k))
                v = data.form(data.bracket(x, y), z) + data.form(y, data.bracket(x, z))
                if v:
                    inv.append((i, j, k))
    checks.append(Check("form-invariant", "B([x,y],z) + B(y,[x,z]) = 0", not inv, str(inv[:4])))

    if data.semisimple:
        kf = data.killing_form()
        checks.append(
            Check(
                "killing-nondegenerate",
                "semisimplicity spot check: Killing form nondegenerate",
                dense_rank(kf) == n,
                "",
            )
        )
    return VerificationReport("lie:validate", checks)


def dual_basis(data: LieAlgebraData) -> list[Vec]:
    """Vectors xi^i with B(xi_j, xi^i) = delta_j^i; DegenerateForm if singular."""
    n = data.dim
    m = SparseMatrixQ(n, n, {(i, j): data.B[i][j] for i in range(n) for j in range(n) if data.B[i][j]})
    duals = []
    for i in range(n):
        sol = m.solve({i: ONE})
        if sol is None:
            raise DegenerateForm(f"bilinear form of {data.name} is degenerate")
        duals.append(tuple(sol.get(j, ZERO) for j in range(n)))
    return duals


def validate_rep(rep: RepresentationData) -> VerificationReport:
    """[rho_i, rho_j] = f_ij^k rho_k, exactly."""
    lie = rep.lie
    n, v = lie.dim, rep.dim_v
    bad = []
    for i in range(n):
        for j in range(n):
            mi, mj = rep.matrices[i], rep.matrices[j]
            comm = [
                [
                    sum((mi[r][t] * mj[t][c] - mj[r][t] * mi[t][c] for t in range(v)), ZERO)
                    for c in range(v)
                ]
                for r in range(v)
            ]
            want = rep.rho(tuple(lie.f[i][j][k] for k in range(n)))
            if comm != want:
                bad.append((i, j))
    checks = [Check("rep-homomorphism", "[rho_i,rho_j] = rho([xi_i,xi_j])", not bad, str(bad[:4]))]
    return VerificationReport("lie:validate-rep", checks)


# -- builtins and loaders ------------------------------------------------------


def t_abelian(n: int, name: Optional[str] = None) -> LieAlgebraData:
    """Rank-n abelian algebra with B = identity."""
    zero_f = tuple(
        tuple(tuple(ZERO for _ in range(n)) for _ in range(n)) for _ in range(n)
    )
    B = tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
    return LieAlgebraData(name or f"t{n}", tuple(f"x{i+1}" for i in range(n)), zero_f, B)


def sl2(name: str = "sl2") -> LieAlgebraData:
    """Basis e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f; B = fundamental trace form."""
    n = 3
    E, F, H = 0, 1, 2
    f = [[[ZERO] * n for _ in range(n)] for _ in range(n)]

    def setb(i, j, coeffs):
        for k, v in coeffs.items():
            f[i][j][k] = Fraction(v)
            f[j][i][k] = -Fraction(v)

    setb(E, F, {H: 1})
    setb(H, E, {E: 2})
    setb(H, F, {F: -2})
    B = [[ZERO] * n for _ in range(n)]
    B[E][F] = B[F][E] = ONE
    B[H][H] = Fraction(2)
    return LieAlgebraData(
        name,
        ("e", "f", "h"),
        tuple(tuple(tuple(r) for r in plane) for plane in f),
        tuple(tuple(r) for r in B),
        semisimple=True,
    )


def sl2_fundamental(lie: Optional[LieAlgebraData] = None) -> RepresentationData:
    lie = lie or sl2()
    e = [[ZERO, ONE], [ZERO, ZERO]]
    f = [[ZERO, ZERO], [ONE, ZERO]]
    h = [[ONE, ZERO], [ZERO, -ONE]]
    return RepresentationData("fundamental", lie, (tuple(map(tuple, e)), tuple(map(tuple, f)), tuple(map(tuple, h))))


def direct_sum(a: LieAlgebraData, b: LieAlgebraData, name: Optional[str] = None) -> LieAlgebraData:
    """Block-structured Lie datum g (+) h with block-diagonal form."""
    n, m = a.dim, b.dim
    t = n + m
    f = [[[ZERO] * t for _ in range(t)] for _ in range(t)]
    B = [[ZERO] * t for _ in range(t)]
    for i in range(n):
        for j in range(n):
            B[i][j] = a.B[i][j]
            for k in range(n):
                f[i][j][k] = a.f[i][j][k]
    for i in range(m):
        for j in range(m):
            B[n + i][n + j] = b.B[i][j]
            for k in range(m):
                f[n + i][n + j][n + k] = b.f[i][j][k]
    return LieAlgebraData(
        name or f"{a.name}+{b.name}",
        tuple(f"{a.name}.{s}" for s in a.basis) + tuple(f"{b.name}.{s}" for s in b.basis),
        tuple(tuple(tuple(r) for r in plane) for plane in f),
        tuple(tuple(r) for r in B),
        semisimple=a.semisimple and b.semisimple,
    )


def direct_sum_rep(ra: RepresentationData, rb: RepresentationData, lie: LieAlgebraData) -> RepresentationData:
    """Block representation of a direct-sum algebra on V_a (+) V_b."""
    va, vb = ra.dim_v, rb.dim_v
    v = va + vb
    mats = []
    for i in range(ra.lie.dim):
        m = [[ZERO] * v for _ in range(v)]
        for r in range(va):
            for c in range(va):
                m[r][c] = ra.matrices[i][r][c]
        mats.append(tuple(map(tuple, m)))
    for i in range(rb.lie.dim):
        m = [[ZERO] * v for _ in range(v)]
        for r in range(vb):
            for c in range(vb):
                m[va + r][va + c] = rb.matrices[i][r][c]
        mats.append(tuple(map(tuple, m)))
    return RepresentationData(f"{ra.name}+{rb.name}", lie, tuple(mats))


def from_json_dict(doc: dict) -> tuple[LieAlgebraData, dict[str, RepresentationData]]:
    """Lie spec JSON: integers and explicit rationals only."""
    try:
        n = int(doc["dim"])
        basis = tuple(doc["basis"])
        if len(basis) != n:
            raise InvalidLieData("basis length disagrees with dim")
        f = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, num, den in doc.get("f", []):
            f[i][j][k] = Fraction(num, den)
        B = [[ZERO] * n for _ in range(n)]
        for i, j, num, den in doc.get("B", []):
            B[i][j] = Fraction(num, den)
        lie = LieAlgebraData(
            doc.get("name", "lie"),
            basis,
            tuple(tuple(tuple(r) for r in plane) for plane in f),
            tuple(tuple(r) for r in B),
            semisimple=bool(doc.get("semisimple", False)),
        )
        reps = {}
        for rname, rdoc in doc.get("reps", {}).items():
            dim_v = int(rdoc["dimV"])
            mats = []
            for mat in rdoc["matrices"]:
                rows = tuple(tuple(_frac(x) for x in row) for row in mat)
                if len(rows) != dim_v or any(len(r) != dim_v for r in rows):
                    raise InvalidLieData(f"rep {rname}: matrix shape != dimV")
                mats.append(rows)
            if len(mats) != n:
                raise InvalidLieData(f"rep {rname}: expected {n} matrices")
            reps[rname] = RepresentationData(rname, lie, tuple(mats))
        return lie, reps
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidLieData(str(exc)) from exc


def load_lie(path: str) -> tuple[LieAlgebraData, dict[str, RepresentationData]]:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))


BUILTINS = {
    "t1": lambda: t_abelian(1),
    "t2": lambda: t_abelian(2),
    "t3": lambda: t_abelian(3),
    "sl2": sl2,
}


def resolve_lie(spec: str) -> tuple[LieAlgebraData, dict[str, RepresentationData]]:
    if spec in BUILTINS:
        lie = BUILTINS[spec]()
        reps = {"fundamental": sl2_fundamental(lie)} if spec == "sl2" else {}
        return lie, reps
    return load_lie(spec)
