from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rshall.coeffs import IntPolynomial
from rshall.errors import ArgumentError, ResourceLimitError
from rshall.fields import gl_order
from rshall.repcat import (
    BUDGET,
    DimVector,
    Multisegment,
    Segment,
    aut_order,
    aut_order_by_count,
    count_automorphisms,
    enumerate_classes,
    euler_form,
    ext_dim,
    gl_dims_order,
    hom_dim,
    hom_dim_oracle,
    hom_ext_oracle,
    iso_class,
    kostant_partition_count,
    realize,
    set_budget,
    submodules,
)

M = Multisegment.parse
x = IntPolynomial.x()


def multisegments(max_vertex=4, max_dim=4):
    seg = st.tuples(st.integers(1, max_vertex), st.integers(0, 2)).map(lambda t: (t[0], min(t[0] + t[1], max_vertex)))
    return st.lists(seg, max_size=3).map(lambda segs: Multisegment.of(*segs)).filter(lambda m: m.total_dim <= max_dim)


def test_euler_form_examples():
    a1, a2 = DimVector.simple(1), DimVector.simple(2)
    assert euler_form(a1, a2) == -1
    assert euler_form(a2, a1) == 0
    assert euler_form(a1, a1) == 1


@pytest.mark.parametrize(
    "m,n,want",
    [("[1,2]", "[1,1]", 1), ("[1,2]", "[2,2]", 0), ("[1,1]+[2,2]", "[1,1]+[2,2]", 2)],
)
def test_hom_examples(m, n, want):
    assert hom_dim(M(m), M(n)) == want
    assert hom_dim_oracle(M(m), M(n)) == want


@pytest.mark.parametrize("m,n,want", [("[1,1]", "[2,2]", 1), ("[2,2]", "[1,1]", 0), ("[1,2]", "[1,2]", 0)])
def test_ext_examples(m, n, want):
    assert ext_dim(M(m), M(n)) == want
    assert hom_ext_oracle(M(m), M(n))[1] == want


def test_enumerate_examples():
    assert enumerate_classes(DimVector((1, 1))) == sorted([M("[1,2]"), M("[1,1]+[2,2]")], key=lambda m: m.items)
    assert enumerate_classes(DimVector((1,))) == [M("[1,1]")]
    assert set(enumerate_classes(DimVector((2, 1)))) == {M("[1,2]+[1,1]"), M("2[1,1]+[2,2]")}


def test_realize_examples():
    m12 = realize(M("[1,2]"), 2)
    assert m12.dims == (1, 1) and [list(r) for r in m12.arrows[0]] == [[1]]
    split = realize(M("[1,1]+[2,2]"), 2)
    assert split.dims == (1, 1) and [list(r) for r in split.arrows[0]] == [[0]]
    ss = realize(M("2[1,1]"), 3)
    assert ss.dims[0] == 2 and not any(ss.dims[1:])


def test_submodule_examples():
    assert len(submodules(realize(M("2[1,1]"), 2), DimVector((1,)))) == 3
    assert len(submodules(realize(M("[1,2]"), 2), DimVector((1, 0)))) == 0
    assert len(submodules(realize(M("[1,2]"), 3), DimVector((0, 1)))) == 1


def test_aut_order_examples():
    assert aut_order(M("[1,1]")) == x - 1
    assert aut_order(M("2[1,1]")) == (x * x - 1) * (x * x - x)
    assert aut_order(M("[1,2]")) == x - 1


@pytest.mark.parametrize("m", ["2[1,1]", "[1,1]+[1,2]", "[1,2]+[2,2]", "[1,1]+[2,2]", "2[1,2]"])
def test_aut_order_matches_counting(m):
    assert aut_order(M(m)) == aut_order_by_count(M(m))


def test_multisegment_text_and_json():
    m = M("2[1,1]+[2,2]")
    assert m.to_text() == "2[1,1]+[2,2]"
    assert m.to_json() == [[1, 1, 2], [2, 2, 1]]
    assert Multisegment.from_json(m.to_json()) == m
    assert M("0").is_zero()
    with pytest.raises(ArgumentError):
        M("[2,1]")


def test_dimvector_format():
    d = DimVector.parse("1,0,2")
    assert d.to_json() == [[1, 1], [3, 2]]
    assert DimVector.from_json(d.to_json()) == d
    assert DimVector((1, 0, 0)) == DimVector((1,))


def test_budget_guard():
    saved = BUDGET.max_total_dim
    try:
        set_budget(max_total_dim=2)
        with pytest.raises(ResourceLimitError):
            BUDGET.check_dim(3)
    finally:
        set_budget(max_total_dim=saved)


@pytest.mark.parametrize("d", [(1, 1), (2, 1), (2, 2, 1), (1, 2, 1), (3, 1, 1), (1, 1, 1, 1)])
def test_class_count_is_kostant_count(d):
    dv = DimVector(d)
    classes = enumerate_classes(dv)
    assert len(classes) == len(set(classes)) == kostant_partition_count(dv)
    assert all(c.dim == dv for c in classes)


@given(multisegments(), multisegments())
def test_euler_identity(m, n):
    h, e = hom_ext_oracle(m, n)
    assert (h, e) == (hom_dim(m, n), ext_dim(m, n))
    assert h - e == euler_form(m.dim, n.dim)


@given(multisegments(max_dim=5), st.sampled_from([2, 3]))
def test_iso_class_roundtrip(m, q):
    assert iso_class(realize(m, q)) == m


@given(multisegments(), multisegments(), multisegments())
def test_hom_is_additive(a, b, c):
    assert hom_dim(a + b, c) == hom_dim(a, c) + hom_dim(b, c)
    assert hom_dim(c, a + b) == hom_dim(c, a) + hom_dim(c, b)


@given(multisegments(max_vertex=3, max_dim=3), st.sampled_from([2, 3]))
def test_aut_order_divides_gl(m, q):
    a = aut_order(m)(q)
    assert gl_dims_order(m.dim, q) % a == 0


def test_count_automorphisms_small():
    assert count_automorphisms(M("2[1,1]"), 2) == gl_order(2, 2)
    assert count_automorphisms(M("[1,1]+[1,2]"), 2) == aut_order(M("[1,1]+[1,2]"))(2)


def test_segment_validation():
    with pytest.raises(ArgumentError):
        Segment.make(0, 1)
