"""Generic extensions, the degeneration order, words and monomial bases.

``M * N`` denotes the generic extension with quotient ``M`` and submodule
``N``: among all classes ``L`` admitting a short exact sequence
``0 -> N -> L -> M -> 0`` it is the one with the largest orbit.  A word
``w = (i_1, ..., i_m)`` maps to ``S_{i_1} * ... * S_{i_m}`` and to the
monomial ``u_{i_1} ... u_{i_m}`` of the Hall algebra.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .coeffs import IntPolynomial, LaurentPolynomial, RationalFunction, q_bracket_factorial, substitute_x
from .errors import ArgumentError, VerificationError
from .hall import STANDARD, HallElement, Parameters, hall_polynomial, product_of
from .repcat import (
    BUDGET,
    DimVector,
    Multisegment,
    Segment,
    end_dim,
    enumerate_classes,
    euler_form,
    hom_dim,
    semisimple_class,
)


# ---------------------------------------------------------------------------
# orbits and generic extensions


def orbit_dim(m: Multisegment) -> int:
    """``dim GL(d) - dim End(M)``."""
    return sum(v * v for v in m.dim.entries) - end_dim(m)


@lru_cache(maxsize=None)
def generic_extension(m: Multisegment, n: Multisegment) -> Multisegment:
    """``m * n``: the extension of ``m`` by ``n`` with maximal orbit dimension."""
    if m.is_zero():
        return n
    if n.is_zero():
        return m
    BUDGET.check_dim(m.total_dim + n.total_dim, "generic extension")
    candidates = [lam for lam in enumerate_classes(m.dim + n.dim) if not hall_polynomial(m, n, lam).is_zero()]
    best = max(orbit_dim(lam) for lam in candidates)
    top = [lam for lam in candidates if orbit_dim(lam) == best]
    if len(top) != 1:
        raise VerificationError(f"generic extension of {m} by {n} is not unique: {top}")
    return top[0]


def degeneration_leq(lam: Multisegment, mu: Multisegment) -> bool:
    """``lam <= mu`` in the degeneration order, via the Hom-order test.

    ``lam <= mu`` iff ``dim Hom(X, lam) >= dim Hom(X, mu)`` for every
    indecomposable ``X`` with ``dim X <= dim lam``.
    """
    if lam.dim != mu.dim:
        raise ArgumentError("degeneration order compares classes of equal dimension")
    d = lam.dim
    for a in d.support:
        b = a
        while d[b] > 0:
            x = Multisegment.of((a, b))
            if hom_dim(x, lam) < hom_dim(x, mu):
                return False
            b += 1
    return True


def degeneration_lt(lam: Multisegment, mu: Multisegment) -> bool:
    return lam != mu and degeneration_leq(lam, mu)


# ---------------------------------------------------------------------------
# words


class Word:
    """Finite sequence of vertex letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int]):
        self.letters = tuple(int(x) for x in letters)
        if any(x < 1 for x in self.letters):
            raise ArgumentError("letters are vertices >= 1")

    @property
    def tight(self) -> tuple[tuple[int, int], ...]:
        """Runs ``(j_r, e_r)`` with ``j_r != j_{r+1}``."""
        out: list[list[int]] = []
        for x in self.letters:
            if out and out[-1][0] == x:
                out[-1][1] += 1
            else:
                out.append([x, 1])
        return tuple((j, e) for j, e in out)

    @classmethod
    def from_tight(cls, runs: Iterable[tuple[int, int]]) -> "Word":
        return cls(j for j, e in runs for _ in range(e))

    @property
    def dim(self) -> DimVector:
        top = max(self.letters, default=0)
        vals = [0] * top
        for x in self.letters:
            vals[x - 1] += 1
        return DimVector(vals)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("Word", self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.letters < other.letters

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.letters)

    def tight_text(self) -> str:
        return " ".join(str(j) if e == 1 else f"{j}^{e}" for j, e in self.tight)

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ArgumentError(f"bad word {text!r}") from exc

    def __repr__(self) -> str:
        return f"Word({self.to_text()})"


def word_to_module(w: Word | Sequence[int]) -> Multisegment:
    """``S_{i_1} * S_{i_2} * ... * S_{i_m}``, folded from the left."""
    letters = tuple(w)
    BUDGET.check_dim(len(letters), "word")
    out = Multisegment()
    for x in letters:
        out = generic_extension(out, Multisegment.simple(x))
    return out


@lru_cache(maxsize=None)
def _phi(letters: tuple[int, ...], lam: Multisegment) -> IntPolynomial:
    if not letters:
        return IntPolynomial.const(1 if lam.is_zero() else 0)
    if len(letters) == 1:
        return IntPolynomial.const(1 if lam == Multisegment.simple(letters[0]) else 0)
    head = Multisegment.simple(letters[0])
    rest_dim = Word(letters[1:]).dim
    total = IntPolynomial()
    for mu in enumerate_classes(rest_dim):
        inner = _phi(letters[1:], mu)
        if inner.is_zero():
            continue
        f = hall_polynomial(head, mu, lam)
        if not f.is_zero():
            total = total + f * inner
    return total


def iterated_hall_poly(w: Word | Sequence[int], lam: Multisegment) -> IntPolynomial:
    """Number of composition series of ``lam`` whose factors, read from the top,
    are ``S_{i_1}, ..., S_{i_m}`` (as a polynomial in the field size)."""
    w = w if isinstance(w, Word) else Word(w)
    if w.dim != lam.dim:
        raise ArgumentError(f"word {w.to_text()} has dimension {w.dim}, class {lam} has {lam.dim}")
    return _phi(w.letters, lam)


def gamma(w: Word | Sequence[int], lam: Multisegment) -> IntPolynomial:
    """``phi_w / prod_r [[e_r]]!`` over the tight form of ``w``; divisibility asserted."""
    w = w if isinstance(w, Word) else Word(w)
    phi = iterated_hall_poly(w, lam)
    den = IntPolynomial.const(1)
    for _, e in w.tight:
        den = den * q_bracket_factorial(e)
    quo, rem = phi.divmod(den)
    if not rem.is_zero():
        raise VerificationError(f"phi_w not divisible by the bracket factorials for {w.to_text()}, {lam}")
    return quo


def is_distinguished(w: Word) -> bool:
    lam = word_to_module(w)
    return gamma(w, lam) == IntPolynomial.const(1)


def _decreasing_run_word(lam: Multisegment) -> Word:
    letters: list[int] = []
    for seg, m in sorted(lam.items, reverse=True):
        for v in range(seg.a, seg.b + 1):
            letters.extend([v] * m)
    return Word(letters)


def _multiset_permutations(letters: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(letters)))


def fiber(lam: Multisegment, limit: int = 8) -> list[Word]:
    """Every word ``w`` with ``word_to_module(w) = lam`` (exhaustive, small classes only)."""
    if lam.total_dim > limit:
        from .errors import ResourceLimitError

        raise ResourceLimitError(f"fiber enumeration limited to total dimension {limit}")
    letters = Word.from_tight((i, lam.dim[i]) for i in lam.dim.support).letters
    return [Word(p) for p in _multiset_permutations(letters) if word_to_module(p) == lam]


def distinguished_word(lam: Multisegment, search_limit: int = 5040) -> Word:
    """A distinguished word in the fiber over ``lam``.

    Segments are taken in decreasing root order and each contributes
    ``a^m (a+1)^m ... b^m``; if that candidate fails verification the
    permutations of its letters are searched.
    """
    BUDGET.check_dim(lam.total_dim, "class")
    w = _decreasing_run_word(lam)
    if word_to_module(w) == lam and is_distinguished(w):
        return w
    for k, p in enumerate(_multiset_permutations(w.letters)):
        if k >= search_limit:
            break
        cand = Word(p)
        if word_to_module(cand) == lam and is_distinguished(cand):
            return cand
    raise VerificationError(f"no distinguished word found for {lam}")


# ---------------------------------------------------------------------------
# monomials


def word_twist_exponent(w: Word | Sequence[int]) -> int:
    """``sum_{k<l} <alpha_{i_k}, alpha_{i_l}>``; the monomial ``u_w`` carries ``s`` to minus this power."""
    letters = tuple(w)
    total = 0
    for k in range(len(letters)):
        for l in range(k + 1, len(letters)):
            total += euler_form(DimVector.simple(letters[k]), DimVector.simple(letters[l]))
    return total


def monomial(w: Word | Sequence[int], rank: int | None = None, params: Parameters = STANDARD) -> HallElement:
    """``u_{i_1} ... u_{i_m}`` computed with the twisted product."""
    letters = tuple(w)
    rank = rank if rank is not None else max(letters, default=1)
    if not letters:
        return HallElement.one(rank, params)
    return product_of(HallElement.simple(x, rank, params) for x in letters)


def monomial_by_phi(w: Word | Sequence[int], rank: int | None = None) -> HallElement:
    """``s^{-E(w)} sum_l phi_w^l(r s^{-1}) u_l`` with ``E`` from :func:`word_twist_exponent`."""
    w = w if isinstance(w, Word) else Word(w)
    rank = rank if rank is not None else max(w.letters, default=1)
    twist = RationalFunction.lift(LaurentPolynomial.monomial((0, -word_twist_exponent(w))))
    x = LaurentPolynomial.monomial((1, -1))
    terms = {}
    for lam in enumerate_classes(w.dim):
        phi = iterated_hall_poly(w, lam)
        if not phi.is_zero():
            terms[lam] = twist * substitute_x(phi, x)
    return HallElement(terms, rank)


def monomial_basis(d: DimVector, distinguished: bool = True, rank: int | None = None) -> list[tuple[Multisegment, Word, HallElement]]:
    """One word per class of dimension ``d`` with the expansion of its monomial.

    Triangularity is asserted: the expansion of ``u_w`` is supported on classes
    below ``word_to_module(w)`` and the leading coefficient is nonzero.
    """
    BUDGET.check_dim(d.total, "component")
    rank = rank if rank is not None else max(len(d), 1)
    out = []
    for lam in enumerate_classes(d):
        w = distinguished_word(lam) if distinguished else fiber(lam, BUDGET.max_total_dim)[0]
        expansion = monomial(w, rank)
        if expansion.coeff(lam).is_zero():
            raise VerificationError(f"monomial {w.to_text()} misses its leading class {lam}")
        for mu in expansion.terms:
            if not degeneration_leq(mu, lam):
                raise VerificationError(f"monomial {w.to_text()} has {mu} outside the order ideal of {lam}")
        out.append((lam, w, expansion))
    return out


# ---------------------------------------------------------------------------
# degeneration posets


class DegenerationPoset:
    """The classes of one dimension vector under the degeneration order."""

    def __init__(self, d: DimVector, leq=degeneration_leq):
        self.d = d
        self.universe = sorted(enumerate_classes(d), key=lambda m: (orbit_dim(m), m.items))
        k = len(self.universe)
        self.relation = [[leq(self.universe[i], self.universe[j]) for j in range(k)] for i in range(k)]

    def index(self, m: Multisegment) -> int:
        return self.universe.index(m)

    def leq(self, a: Multisegment, b: Multisegment) -> bool:
        return self.relation[self.index(a)][self.index(b)]

    def is_partial_order(self) -> bool:
        R = self.relation
        k = len(R)
        refl = all(R[i][i] for i in range(k))
        anti = all(not (R[i][j] and R[j][i]) for i in range(k) for j in range(k) if i != j)
        trans = all(R[i][l] for i in range(k) for j in range(k) for l in range(k) if R[i][j] and R[j][l])
        return refl and anti and trans

    def minimum(self) -> Multisegment | None:
        k = len(self.universe)
        mins = [self.universe[i] for i in range(k) if all(self.relation[i][j] for j in range(k))]
        return mins[0] if len(mins) == 1 else None

    def maximum(self) -> Multisegment | None:
        k = len(self.universe)
        maxs = [self.universe[j] for j in range(k) if all(self.relation[i][j] for i in range(k))]
        return maxs[0] if len(maxs) == 1 else None

    def covers(self) -> list[tuple[Multisegment, Multisegment]]:
        """Pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        U, R = self.universe, self.relation
        k = len(U)
        out = []
        for i in range(k):
            for j in range(k):
                if i == j or not R[i][j]:
                    continue
                if any(l not in (i, j) and R[i][l] and R[l][j] for l in range(k)):
                    continue
                out.append((U[i], U[j]))
        return out

    def linear_extension(self) -> list[Multisegment]:
        """Classes sorted so that every class comes after everything below it."""
        return list(self.universe)

    def to_json(self) -> dict:
        return {
            "dim": self.d.to_json(),
            "classes": [m.to_text() for m in self.universe],
            "covers": [[a.to_text(), b.to_text()] for a, b in self.covers()],
        }

    def to_dot(self) -> str:
        lines = ["digraph degeneration {", "  rankdir=BT;"]
        for i, m in enumerate(self.universe):
            lines.append(f'  n{i} [label="{m.to_text()}"];')
        for a, b in self.covers():
            lines.append(f"  n{self.index(a)} -> n{self.index(b)};")
        lines.append("}")
        return "\n".join(lines)


def leq_by_words(lam: Multisegment, mu: Multisegment, words: Iterable[Word] | None = None) -> bool:
    """Word criterion: some ``w`` over ``mu`` has a composition series of type ``w`` in ``lam``."""
    if lam.dim != mu.dim:
        raise ArgumentError("degeneration order compares classes of equal dimension")
    ws = fiber(mu) if words is None else words
    return any(not iterated_hall_poly(w, lam).is_zero() for w in ws)


def split_class(d: DimVector) -> Multisegment:
    return semisimple_class(d)
