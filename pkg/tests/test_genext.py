from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rshall.coeffs import IntPolynomial
from rshall.errors import ArgumentError
from rshall.genext import (
    DegenerationPoset,
    Word,
    degeneration_leq,
    distinguished_word,
    gamma,
    generic_extension,
    is_distinguished,
    iterated_hall_poly,
    leq_by_words,
    monomial,
    monomial_basis,
    monomial_by_phi,
    orbit_dim,
    split_class,
    word_to_module,
)
from rshall.hall import HallElement
from rshall.repcat import DimVector, Multisegment, enumerate_classes

M = Multisegment.parse
S1, S2, S3 = M("[1,1]"), M("[2,2]"), M("[3,3]")
ZERO = M("0")
x = IntPolynomial.x()


def test_orbit_dims():
    assert orbit_dim(M("[1,2]")) == 1
    assert orbit_dim(M("[1,1]+[2,2]")) == 0
    assert orbit_dim(S1) == 0


def test_generic_extension_examples():
    assert generic_extension(S1, S2) == M("[1,2]")
    assert generic_extension(S2, S1) == M("[1,1]+[2,2]")
    assert generic_extension(M("[1,2]"), ZERO) == M("[1,2]")
    assert generic_extension(ZERO, M("[1,2]")) == M("[1,2]")


def test_degeneration_examples():
    assert degeneration_leq(M("[1,1]+[2,2]"), M("[1,2]"))
    assert not degeneration_leq(M("[1,2]"), M("[1,1]+[2,2]"))
    assert degeneration_leq(M("[1,2]"), M("[1,2]"))
    with pytest.raises(ArgumentError):
        degeneration_leq(S1, S2)


def test_word_modules():
    assert word_to_module(Word((1, 2))) == M("[1,2]")
    assert word_to_module(Word((2, 1))) == M("[1,1]+[2,2]")
    assert word_to_module(Word((1, 2, 3))) == M("[1,3]")


def test_phi_and_gamma():
    assert iterated_hall_poly(Word((1, 2)), M("[1,2]")) == IntPolynomial.const(1)
    assert iterated_hall_poly(Word((2, 1)), M("[1,2]")) == IntPolynomial.const(0)
    assert iterated_hall_poly(Word((1, 1)), M("2[1,1]")) == x + 1
    assert gamma(Word((1, 1)), M("2[1,1]")) == IntPolynomial.const(1)
    assert gamma(Word((1, 2)), M("[1,2]")) == IntPolynomial.const(1)


def test_distinguished_words():
    assert distinguished_word(M("[1,2]")) == Word((1, 2))
    assert distinguished_word(M("[1,1]+[2,2]")) == Word((2, 1))
    assert distinguished_word(M("2[1,1]")) == Word((1, 1))


def test_word_text():
    w = Word.parse("1,1,2")
    assert w.tight == ((1, 2), (2, 1))
    assert Word.from_tight(w.tight) == w
    assert w.dim == DimVector((2, 1))


def test_monoid_relations():
    for i, j in [(1, 2), (2, 3)]:
        si, sj = M(f"[{i},{i}]"), M(f"[{j},{j}]")
        ge = generic_extension
        assert ge(ge(si, sj), si) == ge(ge(si, si), sj)
        assert ge(ge(sj, si), sj) == ge(ge(si, sj), sj)
    assert generic_extension(S1, S3) == generic_extension(S3, S1)


def test_monomial_basis_dim11():
    rows = monomial_basis(DimVector((1, 1)), distinguished=True, rank=2)
    assert sorted(w.letters for _, w, _ in rows) == [(1, 2), (2, 1)]
    exps = {w.letters: e for _, w, e in rows}
    assert exps[(1, 2)] == monomial(Word((1, 2)), 2)


def test_poset_extremes():
    p = DegenerationPoset(DimVector((1, 1, 1)))
    assert p.minimum() == split_class(DimVector((1, 1, 1)))
    assert p.maximum() == M("[1,3]")
    assert p.is_partial_order()
    assert "->" in p.to_dot()


WORDS = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(Word)


@given(WORDS)
def test_monomial_matches_phi_expansion(w):
    assert monomial(w, 3) == monomial_by_phi(w, 3)


@given(WORDS)
def test_word_module_is_leading_term(w):
    lam = word_to_module(w)
    expansion = monomial(w, 3)
    assert not expansion.coeff(lam).is_zero()
    assert all(degeneration_leq(mu, lam) for mu, _ in expansion.sorted_terms())


@given(st.sampled_from([m for d in [(1, 1, 1), (2, 1, 0), (1, 2, 1), (2, 1, 1)] for m in enumerate_classes(DimVector(d))]))
def test_distinguished_word_realizes_class(lam):
    w = distinguished_word(lam)
    assert word_to_module(w) == lam
    assert is_distinguished(w)
    assert gamma(w, lam) == IntPolynomial.const(1)


@given(st.sampled_from(enumerate_classes(DimVector((1, 2, 1)))), st.sampled_from(enumerate_classes(DimVector((1, 2, 1)))))
def test_hom_order_matches_word_order(a, b):
    assert degeneration_leq(a, b) == leq_by_words(a, b)


def test_identity_element():
    assert monomial(Word(()), 2) == HallElement.one(2)
