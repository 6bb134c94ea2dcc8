"""Exact scalars, creation modes, super-monomials and states.

A state is a finite rational-linear combination of normally ordered
creation-mode monomials over the generator set of a free-field algebra.
Monomials are kept in a fixed canonical order (generator ordinal ascending,
then mode index ascending); Koszul reordering signs are absorbed into the
coefficients, never stored in the monomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional

Scalar = Fraction
Mode = tuple[int, int]  # (generator ordinal, mode index <= -1)
Monomial = tuple[Mode, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def normalize_modes(modes: Iterable[Mode], parity: tuple[int, ...]) -> tuple[int, Optional[Monomial]]:
    """Sort modes into canonical order, tracking the Koszul sign.

    Returns (sign, monomial) where sign is +-1, or (1, None) when an odd
    mode is repeated (odd square, hence the zero monomial).
    """
    out: list[Mode] = []
    sign = 1
    for mode in modes:
        if mode[1] > -1:
            raise ValueError(f"creation index must be <= -1, got {mode}")
        g = mode[0]
        odd = parity[g]
        j = len(out)
        while j > 0 and out[j - 1] > mode:
            if odd and parity[out[j - 1][0]]:
                sign = -sign
            j -= 1
        out.insert(j, mode)
    for a, b in zip(out, out[1:]):
        if a == b and parity[a[0]]:
            return 1, None
    return sign, tuple(out)


class State:
    """Immutable element of the Fock module of a free-field algebra.

    `terms` maps canonical monomials to nonzero rational coefficients; the
    empty monomial is the vacuum.
    """

    __slots__ = ("alg", "terms", "_hash", "_grade")

    def __init__(self, alg, terms: dict[Monomial, Fraction]):
        self.alg = alg
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None
        self._grade = -1  # sentinel: not computed

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, State)
            and self.alg is other.alg
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.alg), frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        from .expr import format_state

        return f"State({format_state(self)!r})"

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items()))

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "State") -> "State":
        if self.alg is not other.alg:
            from .errors import MixedAlgebras

            raise MixedAlgebras("cannot add states of different algebras")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return State(self.alg, terms)

    def __sub__(self, other: "State") -> "State":
        return self + (-other)

    def __neg__(self) -> "State":
        return State(self.alg, {m: -c for m, c in self.terms.items()})

    def scale(self, k) -> "State":
        k = Fraction(k)
        if not k:
            return State(self.alg, {})
        return State(self.alg, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, k) -> "State":
        return self.scale(k)

    __rmul__ = __mul__

    # -- grading -------------------------------------------------------------

    def grade(self) -> Optional[tuple[int, int, int]]:
        """Common (degree, weight, aux) of all monomials, or None if mixed.

        The zero state reports None as well; callers that care distinguish
        it with is_zero().
        """
        if self._grade == -1:
            grades = {self.alg.mono_grade(m) for m in self.terms}
            self._grade = grades.pop() if len(grades) == 1 else None
        return self._grade

    def weight_max(self) -> int:
        return max((self.alg.mono_grade(m)[1] for m in self.terms), default=0)

    def parity(self) -> Optional[int]:
        ps = {self.alg.mono_parity(m) for m in self.terms}
        return ps.pop() if len(ps) == 1 else None


def fock_multiply(a: State, b: State) -> State:
    """Supercommutative product by monomial concatenation.

    Valid as a product of states because creation modes of free fields
    supercommute; this is NOT the Wick product of composite states.
    """
    if a.alg is not b.alg:
        from .errors import MixedAlgebras

        raise MixedAlgebras("fock_multiply across algebras")
    alg = a.alg
    terms: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, mono = normalize_modes(ma + mb, alg.parity)
            if mono is None:
                continue
            terms[mono] = terms.get(mono, ZERO) + sign * ca * cb
    return State(alg, terms)


def grade(s: State):
    """Spec-level grading operation: tuple, or the inhomogeneous marker None."""
    return s.grade()
