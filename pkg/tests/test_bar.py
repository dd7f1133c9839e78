from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rshall.bar import (
    bar_element,
    bar_matrix,
    bar_matrix_discrepancies,
    bar_report,
    canonical_basis,
    canonical_violations,
    in_literal_lattice,
    omega,
    perturbation_breaks,
    specialization_mismatches,
    top_split,
)
from rshall.coeffs import bar as bar_coeff
from rshall.coeffs import parse_coefficient
from rshall.errors import ArgumentError
from rshall.hall import HallElement
from rshall.repcat import DimVector, Multisegment, enumerate_classes

M = Multisegment.parse
S1 = M("[1,1]")


def u(text, rank=2):
    return HallElement.basis(M(text), rank)


def c(text):
    return parse_coefficient(text)


def test_bar_examples():
    assert bar_element(u("[1,1]")) == u("[1,1]")
    assert bar_element(u("[1,1]").scale(c("r"))) == u("[1,1]").scale(c("s"))
    assert bar_element(bar_element(u("[1,2]"))) == u("[1,2]")


def test_canonical_dim11():
    basis = {e.alpha.to_text(): e.to_text() for e in canonical_basis(DimVector((1, 1)))}
    assert basis == {
        "[1,1]+[2,2]": "<u([1,1]+[2,2])>",
        "[1,2]": "<u([1,2])> + s*<u([1,1]+[2,2])>",
    }


def test_top_split_of_isotypic_is_none():
    assert top_split(M("2[1,1]")) is None
    assert top_split(M("[1,2]")) is None
    assert top_split(M("[1,1]+[2,2]")) is not None


DIMS = [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2), (2, 2, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("d", DIMS)
def test_recursion_matches_direct_inverse(d):
    assert bar_matrix_discrepancies(DimVector(d)) == []


@pytest.mark.parametrize("d", DIMS)
def test_bar_matrix_properties(d):
    bm = bar_matrix(DimVector(d))
    assert bm.unitriangularity_violations() == []
    assert bm.lattice_violations() == []
    assert bm.involution_violations() == []


@pytest.mark.parametrize("d", DIMS)
def test_canonical_basis_properties(d):
    for elt in canonical_basis(DimVector(d)):
        assert canonical_violations(elt) == []
    assert specialization_mismatches(DimVector(d)) == []


def test_literal_lattice():
    assert in_literal_lattice(c("s"))
    assert in_literal_lattice(c("s^-1"))
    assert in_literal_lattice(c("r*s"))
    assert in_literal_lattice(c("r"))
    assert not in_literal_lattice(c("r^2"))
    assert not in_literal_lattice(c("s^-2"))


def test_perturbation_breaks_canonical_element():
    (elt,) = [e for e in canonical_basis(DimVector((1, 1))) if e.alpha == M("[1,2]")]
    low = M("[1,1]+[2,2]")
    for delta in ["1", "s", "r", "r*s^-1", "s+r", "-s"]:
        assert perturbation_breaks(elt, low, c(delta))
    with pytest.raises(ArgumentError):
        perturbation_breaks(elt, M("[1,2]"), c("1"))


def test_bar_report():
    report = bar_report(DimVector((2, 1)))
    assert report["passed"]


CLASSES = [m for d in [(1, 1, 0), (2, 1, 0), (1, 1, 1), (1, 2, 1)] for m in enumerate_classes(DimVector(d))]
COEFFS = st.sampled_from(["1", "r", "s", "r+s", "r^2*s^-1", "-3*r*s"])


@given(st.sampled_from(CLASSES), COEFFS, st.sampled_from(CLASSES), COEFFS)
def test_bar_is_involutive_and_semilinear(a, ca, b, cb):
    x = HallElement.basis(a, 3).scale(c(ca)) + HallElement.basis(b, 3).scale(c(cb))
    assert bar_element(bar_element(x)) == x
    assert bar_element(x.scale(c("r"))) == bar_element(x).scale(c("s"))


@given(st.sampled_from([m for m in CLASSES if m.total_dim <= 3]), st.sampled_from([m for m in CLASSES if m.total_dim <= 2]))
def test_bar_is_multiplicative(a, b):
    x, y = HallElement.basis(a, 3), HallElement.basis(b, 3)
    assert bar_element(x * y) == bar_element(x) * bar_element(y)


@given(st.sampled_from(CLASSES))
def test_omega_diagonal_is_one(a):
    assert omega(a)[a] == 1
    assert bar_coeff(omega(a)[a]) == 1
