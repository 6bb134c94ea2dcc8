"""Free-field vertex superalgebra calculus.

Circle products a o_n b for all integer n are computed by structural
recursion on the leading creation mode of a, using the iterate expansion of
normally ordered fields:

    Y(x(-1-k) a, z) = :(d^k x / k!)(z) Y(a, z):

whose n-th mode, applied to a state, gives two terminating sums (creation
side and annihilation side).  All sums terminate because weights are
bounded below by zero and annihilation operators kill the vacuum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import Mode, Monomial, Scalar, State, ZERO, ONE, fock_multiply, normalize_modes
from .errors import GradeError, MixedAlgebras, UnknownGenerator


def binom(m: int, k: int) -> int:
    """Binomial coefficient C(m, k) for any integer m, k >= 0 (falling factorial)."""
    num = 1
    for i in range(k):
        num *= m - i
    return num // math.factorial(k)


@dataclass(frozen=True)
class GeneratorSpec:
    """One free-field generator: parity in {0,1}, weight in {0,1}."""

    name: str
    parity: int
    weight: int
    degree: int
    aux: int = 0

    def __post_init__(self):
        if self.weight not in (0, 1):
            raise ValueError(f"generator weight must be 0 or 1, got {self.weight}")
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")


class FreeFieldAlgebra:
    """Generator table plus scalar contraction table; defines all OPEs.

    The contraction entry k for a pair (x, y) means the super-bracket of
    modes is [x(m), y(n)]_± = k * delta_{m+n,-1} * id.  Given entries are
    completed by symmetry: anticommutators are symmetric (odd-odd pairs),
    commutators antisymmetric (even-even pairs).
    """

    def __init__(self, label: str, generators: Sequence[GeneratorSpec],
                 contractions: dict[tuple[str, str], Fraction]):
        self.label = label
        self.gens = tuple(generators)
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        n = len(self.gens)
        self.parity = tuple(g.parity for g in self.gens)
        self.weight = tuple(g.weight for g in self.gens)
        self.degree = tuple(g.degree for g in self.gens)
        self.aux = tuple(g.aux for g in self.gens)
        self.contr = [[ZERO] * n for _ in range(n)]
        for (na, nb), k in contractions.items():
            if na not in self.index or nb not in self.index:
                raise UnknownGenerator(f"contraction references unknown generator ({na},{nb})")
            i, j = self.index[na], self.index[nb]
            k = Fraction(k)
            if not k:
                continue
            if self.parity[i] != self.parity[j]:
                raise ValueError(f"nonzero contraction between generators of different parity: {na},{nb}")
            if self.weight[i] + self.weight[j] != 1 or self.degree[i] + self.degree[j] != 0:
                raise ValueError(f"contraction must pair opposite-degree, weight-complementary partners: {na},{nb}")
            mirror = k if self.parity[i] else -k
            if self.contr[i][j] not in (ZERO, k) or self.contr[j][i] not in (ZERO, mirror):
                raise ValueError(f"inconsistent contraction entries for ({na},{nb})")
            self.contr[i][j] = k
            self.contr[j][i] = mirror
        self._circle_cache: dict = {}
        self._ann_cache: dict = {}

    # -- constructors ---------------------------------------------------------

    def zero(self) -> State:
        return State(self, {})

    def vacuum(self) -> State:
        return State(self, {(): ONE})

    def gen(self, name: str, idx: int = -1) -> State:
        if name not in self.index:
            raise UnknownGenerator(name)
        if idx > -1:
            raise ValueError("gen() builds creation states; use apply_mode for annihilation")
        return State(self, {((self.index[name], idx),): ONE})

    def state(self, terms: dict[Monomial, Fraction]) -> State:
        return State(self, dict(terms))

    def combination(self, coeffs: Iterable[tuple[Scalar, State]]) -> State:
        out = self.zero()
        for c, s in coeffs:
            out = out + s.scale(c)
        return out

    # -- grading ---------------------------------------------------------------

    def mono_grade(self, m: Monomial) -> tuple[int, int, int]:
        d = w = a = 0
        for g, idx in m:
            d += self.degree[g]
            w += self.weight[g] + (-1 - idx)
            a += self.aux[g]
        return d, w, a

    def mono_parity(self, m: Monomial) -> int:
        return sum(self.parity[g] for g, _ in m) & 1

    def mono_weight(self, m: Monomial) -> int:
        return sum(self.weight[g] + (-1 - idx) for g, idx in m)

    def has_aux(self) -> bool:
        return any(self.aux)

    def spec_dict(self) -> dict:
        """Canonical JSON-ready description, used for cache keys."""
        return {
            "label": self.label,
            "generators": [
                [g.name, g.parity, g.weight, g.degree, g.aux] for g in self.gens
            ],
            "contractions": sorted(
                [self.gens[i].name, self.gens[j].name, str(self.contr[i][j])]
                for i in range(len(self.gens))
                for j in range(len(self.gens))
                if self.contr[i][j]
            ),
        }

    # -- mode action -------------------------------------------------------------

    def apply_mode(self, name: str, m: int, s: State) -> State:
        """Action of the Fourier mode x(m) on a state."""
        if name not in self.index:
            raise UnknownGenerator(name)
        if s.alg is not self:
            raise MixedAlgebras("apply_mode on a state of a different algebra")
        g = self.index[name]
        terms: dict[Monomial, Fraction] = {}
        for mono, c in s.terms.items():
            if m <= -1:
                sign, nm = normalize_modes(((g, m),) + mono, self.parity)
                if nm is not None:
                    terms[nm] = terms.get(nm, ZERO) + sign * c
            else:
                for nm, k in self._annihilate(g, m, mono):
                    terms[nm] = terms.get(nm, ZERO) + k * c
        return State(self, terms)

    def _annihilate(self, g: int, m: int, mono: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
        """x_g(m) (m >= 0) moved through a creation monomial, collecting contractions."""
        key = (g, m, mono)
        hit = self._ann_cache.get(key)
        if hit is not None:
            return hit
        out: dict[Monomial, Fraction] = {}
        sign = 1
        pg = self.parity[g]
        for pos, (h, idx) in enumerate(mono):
            if m + idx == -1:
                k = self.contr[g][h]
                if k:
                    nm = mono[:pos] + mono[pos + 1:]
                    out[nm] = out.get(nm, ZERO) + sign * k
            if pg and self.parity[h]:
                sign = -sign
        res = tuple(out.items())
        self._ann_cache[key] = res
        return res

    # -- circle products ------------------------------------------------------------

    def circle(self, a: State, n: int, b: State) -> State:
        """The n-th circle product a o_n b, exact for every integer n."""
        if a.alg is not self or b.alg is not self:
            raise MixedAlgebras("circle product across algebras")
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                for mono, k in self._circle_mono(ma, n, mb):
                    terms[mono] = terms.get(mono, ZERO) + k * ca * cb
        return State(self, terms)

    def _circle_mono(self, am: Monomial, n: int, bm: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
        key = (am, n, bm)
        hit = self._circle_cache.get(key)
        if hit is not None:
            return hit

        if not am:
            res = ((bm, ONE),) if n == -1 else ()
            self._circle_cache[key] = res
            return res

        g, idx = am[0]
        rest = am[1:]
        k = -1 - idx
        sgn_k = -1 if k & 1 else 1
        out: dict[Monomial, Fraction] = {}

        # Creation side: sum over m <= -1 of C(m,k)(-1)^k x(m-k) (rest o_{n-m-1} b).
        wt_bound = self.mono_weight(rest) + self.mono_weight(bm)
        for m in range(-1, n - wt_bound - 1, -1):
            j = n - m - 1
            inner = self._circle_mono(rest, j, bm)
            if not inner:
                continue
            coeff = Fraction(sgn_k * binom(m, k))
            for mono, c in inner:
                sign, nm = normalize_modes(((g, m - k),) + mono, self.parity)
                if nm is not None:
                    out[nm] = out.get(nm, ZERO) + sign * coeff * c

        # Annihilation side: m = k + q, q >= 0; apply x(q) to b first.
        koszul = -1 if (self.parity[g] and self.mono_parity(rest)) else 1
        for q in range(0, self.weight[g] + self.mono_weight(bm)):
            xb = self._annihilate(g, q, bm)
            if not xb:
                continue
            j = n - (q + k) - 1
            coeff = Fraction(koszul * sgn_k * binom(q + k, k))
            for bm2, c2 in xb:
                for mono, c in self._circle_mono(rest, j, bm2):
                    out[mono] = out.get(mono, ZERO) + coeff * c2 * c

        res = tuple((m, c) for m, c in out.items() if c)
        self._circle_cache[key] = res
        return res

    def wick(self, *states: State) -> State:
        """Right-nested Wick product :a b ...: = a o_{-1} (b o_{-1} (...))."""
        if not states:
            return self.vacuum()
        out = states[-1]
        for s in reversed(states[:-1]):
            out = self.circle(s, -1, out)
        return out

    def derivative(self, a: State) -> State:
        """Formal derivative; equals a o_{-2} |0>."""
        terms: dict[Monomial, Fraction] = {}
        for mono, c in a.terms.items():
            for pos, (g, idx) in enumerate(mono):
                coeff = Fraction(-idx) * c
                sign, nm = normalize_modes(
                    mono[:pos] + ((g, idx - 1),) + mono[pos + 1:], self.parity
                )
                if nm is not None:
                    terms[nm] = terms.get(nm, ZERO) + sign * coeff
        return State(self, terms)

    def ope_singular(self, a: State, b: State) -> list[tuple[int, State]]:
        """All nonzero poles a o_p b, p >= 0; finite since p is weight-bounded."""
        pmax = a.weight_max() + b.weight_max() - 1
        out = []
        for p in range(0, pmax + 1):
            s = self.circle(a, p, b)
            if not s.is_zero():
                out.append((p, s))
        return out


def mode_shift(a: State, n: int) -> tuple[int, int, int]:
    """Grade shift of the operator a(n): result grade minus argument grade."""
    g = a.grade()
    if g is None:
        raise GradeError("operator state must be homogeneous")
    d, w, x = g
    return d, w - n - 1, x
