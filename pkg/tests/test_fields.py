from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rshall.errors import ResourceLimitError
from rshall.fields import PRIME_POWER_LADDER, field, gaussian_binomial, gl_order, ladder, prime_power

QS = [2, 3, 4, 5, 7, 8, 9]


def test_ladder_prefix():
    assert PRIME_POWER_LADDER[:10] == (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
    assert ladder(3) == [2, 3, 4]
    with pytest.raises(ResourceLimitError):
        ladder(10, q_max=13)


def test_prime_power_detection():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    with pytest.raises(Exception):
        prime_power(6)


@pytest.mark.parametrize("q", QS)
def test_field_axioms(q):
    f = field(q)
    els = range(q)
    for a, b in itertools.product(els, els):
        assert f.add[a][b] == f.add[b][a]
        assert f.mul[a][b] == f.mul[b][a]
        assert f.sub[f.add[a][b]][b] == a
    for a in range(1, q):
        assert f.mul[a][f.inv[a]] == 1
    for a, b, c in itertools.product(els, els, els):
        assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_subspace_count_is_gaussian_binomial(q, n, k):
    f = field(q)
    spaces = list(f.subspaces(n, k))
    assert len(spaces) == gaussian_binomial(n, k, q)
    assert len({tuple(map(tuple, b)) for b in spaces}) == len(spaces)


@pytest.mark.parametrize("q", [2, 3])
def test_invertible_matrix_count(q):
    f = field(q)
    count = sum(
        1
        for entries in itertools.product(range(q), repeat=4)
        if f.is_invertible([list(entries[:2]), list(entries[2:])])
    )
    assert count == gl_order(2, q)


@given(st.sampled_from(QS), st.data())
def test_rank_nullity(q, data):
    f = field(q)
    nvars = data.draw(st.integers(1, 4))
    rows = data.draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * nvars), max_size=4))
    null = f.nullspace(rows, nvars)
    assert f.rank(rows) + len(null) == nvars
    for vec in null:
        for row in rows:
            acc = 0
            for a, b in zip(row, vec):
                acc = f.add[acc][f.mul[a][b]]
            assert acc == 0
