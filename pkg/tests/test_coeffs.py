from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rshall.coeffs import (
    V,
    IntPolynomial,
    LaurentPolynomial,
    RationalFunction,
    bar,
    interpolate,
    parse_coefficient,
    quantum_integer,
    rs_monomial,
    specialize_one_param,
    substitute_x,
    v_bar,
)
from rshall.errors import ArgumentError, InterpolationError, PoleError

r = LaurentPolynomial.gen("r")
s = LaurentPolynomial.gen("s")
X = rs_monomial(1, -1)


def lift(x):
    return RationalFunction.lift(x)


laurent = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5), max_size=4
).map(LaurentPolynomial)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
int_poly = st.lists(st.integers(-4, 4), max_size=4).map(IntPolynomial)


def test_difference_of_squares():
    assert (r + s) * (r - s) == r**2 - s**2


def test_additive_identity():
    assert (r + s) + 0 == r + s


def test_reduction_to_quantum_two():
    q2 = RationalFunction(r**2 - s**2, r - s)
    assert q2 == lift(r + s)
    assert q2.is_laurent()
    assert quantum_integer(2) == lift(r + s)


def test_monomial_denominator_folds():
    assert RationalFunction(r * s + s, s) == lift(r + 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        lift(r) / lift(0)


def test_canonical_text_and_json():
    assert (r + s).to_text() == "1*r^1*s^0 + 1*r^0*s^1"
    assert (r + s).to_json() == [[0, 1, 1], [1, 0, 1]]
    assert LaurentPolynomial.from_json([[0, 1, 1], [1, 0, 1]]) == r + s


def test_substitute_x_examples():
    assert substitute_x(IntPolynomial([1, 1]), X) == lift(X + 1)
    assert substitute_x(IntPolynomial([1]), X) == 1
    assert substitute_x(IntPolynomial([0, 0, 1]), X) == lift(rs_monomial(2, -2))


def test_bar_examples():
    assert bar(r) == s
    assert bar(X) == rs_monomial(-1, 1)
    assert bar(r + s) == r + s


def test_specialization_examples():
    v = LaurentPolynomial.gen("v", V)
    vi = LaurentPolynomial.monomial((-1,), 1, V)
    assert specialize_one_param(r + s) == RationalFunction.lift(v + vi, V)
    assert specialize_one_param(X) == RationalFunction.lift(v * v, V)
    assert specialize_one_param(s - r) == RationalFunction.lift(vi - v, V)


def test_specialization_pole():
    with pytest.raises(PoleError):
        specialize_one_param(RationalFunction(lift(1).num, r * s - 1))


def test_interpolate_examples():
    assert interpolate([(2, 3), (3, 4)], 1) == IntPolynomial([1, 1])
    assert interpolate([(2, 1), (3, 1), (5, 1)], 2) == IntPolynomial([1])
    assert interpolate([(2, 7), (3, 13), (4, 21)], 2) == IntPolynomial([1, 1, 1])


def test_interpolate_rejects_bad_data():
    with pytest.raises(InterpolationError):
        interpolate([(2, 1), (3, 2)], 0)  # constant bound, non-constant data
    with pytest.raises(InterpolationError):
        interpolate([(2, 0), (4, 1)], 1)  # slope 1/2


def test_parse_coefficient():
    assert parse_coefficient("(r+s)^2/(r*s)") == lift(rs_monomial(1, -1) + 2 + rs_monomial(-1, 1))
    assert parse_coefficient("-s^-1") == lift(rs_monomial(0, -1, -1))
    with pytest.raises(ArgumentError):
        parse_coefficient("r+")


@given(laurent)
def test_bar_is_involution(p):
    assert bar(bar(p)) == p


@given(laurent, laurent)
def test_bar_is_ring_map(p, q):
    assert bar(p * q) == bar(p) * bar(q)
    assert bar(p + q) == bar(p) + bar(q)


@given(laurent)
def test_specialization_commutes_with_bar(p):
    assert specialize_one_param(bar(p)) == v_bar(specialize_one_param(p))


@given(int_poly, int_poly)
def test_substitute_x_is_ring_map(p, q):
    assert substitute_x(p * q, X) == substitute_x(p, X) * substitute_x(q, X)
    assert substitute_x(p + q, X) == substitute_x(p, X) + substitute_x(q, X)


@given(laurent, nonzero_laurent, laurent, nonzero_laurent)
def test_rational_equality_matches_cross_multiplication(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert (x == y) == (a * d == b * c)
    assert x.equals_cross(y) == (x == y)


@given(laurent, nonzero_laurent)
def test_rational_field_axioms(a, b):
    x = RationalFunction(a, b)
    assert x - x == 0
    if not x.is_zero():
        assert x * x.inverse() == 1
    assert RationalFunction.from_json(x.to_json()) == x


@given(laurent)
def test_laurent_json_roundtrip(p):
    assert LaurentPolynomial.from_json(p.to_json()) == p


@given(laurent)
def test_laurent_text_parses_back(p):
    assert parse_coefficient(p.pretty()) == lift(p)


@given(laurent, st.tuples(st.integers(1, 5), st.integers(1, 5)))
def test_evaluate_is_homomorphic(p, point):
    vals = [Fraction(point[0]), Fraction(point[1], 7)]
    assert (p * p).evaluate(vals) == p.evaluate(vals) ** 2


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_interpolation_recovers_polynomial(coeffs):
    p = IntPolynomial(coeffs)
    pts = [2, 3, 4, 5, 7, 8]
    samples = [(q, p(q)) for q in pts[: len(coeffs) + 1]]
    assert interpolate(samples, len(coeffs) - 1) == p
