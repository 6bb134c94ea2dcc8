"""Exact sparse linear algebra over the rationals.

Row reduction keeps rows as integer sparse vectors with a gcd normalization
(fraction-free row operations); the reduced row echelon form is canonical
for a fixed column order, so every downstream basis and representative is
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .core import ZERO, ONE
from .errors import NotNilpotent

DENSE_LIMIT = 64  # below this dimension a dense sweep is used as-is


class SparseMatrixQ:
    """Sparse rational matrix stored as a (row, col) -> Fraction mapping."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Optional[dict] = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), v in entries.items():
                v = Fraction(v)
                if v:
                    self.entries[(r, c)] = v

    @classmethod
    def identity(cls, n: int) -> "SparseMatrixQ":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def from_columns(cls, cols: list[dict[int, Fraction]], rows: int) -> "SparseMatrixQ":
        m = cls(rows, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    m.entries[(i, j)] = Fraction(v)
        return m

    def triplets(self) -> list[tuple[int, int, Fraction]]:
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrixQ)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __add__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        out = SparseMatrixQ(self.rows, self.cols, dict(self.entries))
        for k, v in other.entries.items():
            s = out.entries.get(k, ZERO) + v
            if s:
                out.entries[k] = s
            else:
                out.entries.pop(k, None)
        return out

    def __sub__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        return self + other.scale(-1)

    def scale(self, k) -> "SparseMatrixQ":
        k = Fraction(k)
        if not k:
            return SparseMatrixQ(self.rows, self.cols)
        return SparseMatrixQ(self.rows, self.cols, {p: k * v for p, v in self.entries.items()})

    def matvec(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                s = out.get(r, ZERO) + v * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def matmul(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        assert self.cols == other.rows
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = SparseMatrixQ(self.rows, other.cols)
        acc: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in self.entries.items():
            for c2, v2 in by_row.get(c, ()):
                k = (r, c2)
                s = acc.get(k, ZERO) + v * v2
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        out.entries = acc
        return out

    def stack(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        """Vertical stack [self; other]."""
        assert self.cols == other.cols
        out = SparseMatrixQ(self.rows + other.rows, self.cols, dict(self.entries))
        for (r, c), v in other.entries.items():
            out.entries[(r + self.rows, c)] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        m = [[ZERO] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    # -- elimination ---------------------------------------------------------

    def _int_rows(self) -> list[dict[int, int]]:
        rows: list[dict[int, int]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        out = []
        for row in rows:
            if not row:
                out.append({})
                continue
            den = 1
            for v in row.values():
                den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
            irow = {c: int(v * den) for c, v in row.items()}
            g = 0
            for v in irow.values():
                g = gcd(g, abs(v))
            if g > 1:
                irow = {c: v // g for c, v in irow.items()}
            out.append(irow)
        return out

    def rref(self) -> tuple[list[int], list[dict[int, Fraction]]]:
        """Canonical reduced row echelon form: (pivot columns, unit-pivot rows).

        Pivoting walks columns left to right; within a column the sparsest
        candidate row is eliminated first (Markowitz-style), which does not
        change the RREF since the RREF is unique for a fixed column order.
        """
        rows = self._int_rows()
        live = [i for i, r in enumerate(rows) if r]
        pivots: list[int] = []
        piv_rows: list[dict[int, int]] = []
        for col in range(self.cols):
            cand = [i for i in live if rows[i].get(col)]
            if not cand:
                continue
            cand.sort(key=lambda i: (len(rows[i]), i))
            p = cand[0]
            live.remove(p)
            prow = rows[p]
            pv = prow[col]
            for i in cand[1:]:
                row = rows[i]
                f = row[col]
                # integer row op: row <- row*pv - prow*f, then gcd-normalize
                for c, v in prow.items():
                    s = row.get(c, 0) * pv - v * f
                    if s:
                        row[c] = s
                    else:
                        row.pop(c, None)
                for c in [c for c in row if c not in prow]:
                    row[c] = row[c] * pv
                g = 0
                for v in row.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    rows[i] = {c: v // g for c, v in row.items()}
                if not rows[i]:
                    live.remove(i)
            pivots.append(col)
            piv_rows.append(prow)
        # back-substitution to full RREF, over Fractions
        frows = [{c: Fraction(v) for c, v in prow.items()} for prow in piv_rows]
        result: list[dict[int, Fraction]] = []
        for k in range(len(pivots) - 1, -1, -1):
            col = pivots[k]
            row = frows[k]
            pv = row[col]
            row = {c: v / pv for c, v in row.items()}
            for j in range(k + 1, len(pivots)):
                f = row.get(pivots[j])
                if f:
                    for c, v in result[len(pivots) - 1 - j].items():
                        s = row.get(c, ZERO) - f * v
                        if s:
                            row[c] = s
                        else:
                            row.pop(c, None)
            result.append(row)
        result.reverse()
        return pivots, result

    def rank(self) -> int:
        return len(self.rref()[0])

    def nullspace(self) -> list[dict[int, Fraction]]:
        """Canonical kernel basis, one vector per free column, ascending."""
        pivots, rows = self.rref()
        pivset = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivset:
                continue
            vec = {free: ONE}
            for col, row in zip(pivots, rows):
                v = row.get(free)
                if v:
                    vec[col] = -v
            basis.append(vec)
        return basis

    def solve(self, rhs: dict[int, Fraction]) -> Optional[dict[int, Fraction]]:
        """One exact solution of self * x = rhs (free variables zero), or None."""
        aug = SparseMatrixQ(self.rows, self.cols + 1, dict(self.entries))
        for r, v in rhs.items():
            if v:
                aug.entries[(r, self.cols)] = Fraction(v)
        pivots, rows = aug.rref()
        if self.cols in pivots:
            return None
        x: dict[int, Fraction] = {}
        for col, row in zip(pivots, rows):
            v = row.get(self.cols)
            if v:
                x[col] = v
        return x


def dense_rank(matrix: list[list[Fraction]]) -> int:
    """Independent dense Gaussian elimination oracle (no pivot heuristics)."""
    m = [list(map(Fraction, row)) for row in matrix]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(nrows):
            if r != rank and m[r][col]:
                f = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
    return rank


def exp_nilpotent(op: SparseMatrixQ, sign: int = 1) -> SparseMatrixQ:
    """Sum op^k/k! until the power vanishes; NotNilpotent past dim+1 steps."""
    assert op.rows == op.cols
    n = op.rows
    acc = SparseMatrixQ.identity(n)
    term = SparseMatrixQ.identity(n)
    base = op.scale(sign)
    for k in range(1, n + 2):
        term = term.matmul(base).scale(Fraction(1, k))
        if term.is_zero():
            return acc
        acc = acc + term
    raise NotNilpotent(f"operator power did not vanish within {n + 1} iterations")
