from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import jordan
from ginv.engine import m_weak_group
from ginv.generators import (
    GenSpec,
    SpecError,
    gen_additive_pair,
    gen_product_pair,
    gen_with_index,
    random_unitary_permutation,
)
from ginv.matrix import Matrix

import random


def rank_chain_index(A):
    """Least k with rank(A^k) = rank(A^(k+1)), by direct powers."""
    ranks = [A.rows]
    P = Matrix.identity(A.rows)
    while True:
        P = P @ A
        ranks.append(P.rank())
        if ranks[-1] == ranks[-2]:
            return len(ranks) - 2


def test_spec_validation():
    with pytest.raises(SpecError):
        GenSpec(dim=3, index=4)
    with pytest.raises(SpecError):
        GenSpec(dim=0, index=0)
    with pytest.raises(SpecError):
        GenSpec(dim=9, index=1)
    with pytest.raises(SpecError):
        GenSpec(dim=2, index=1, entry_bound=0)
    with pytest.raises(SpecError):
        GenSpec(dim=2, index=-1)


def test_index_zero_is_invertible():
    A = gen_with_index(GenSpec(3, 0, seed=7))
    assert A.is_invertible() and rank_chain_index(A) == 0


def test_index_three_in_dim_three_is_similar_to_j3():
    A = gen_with_index(GenSpec(3, 3, seed=7))
    assert rank_chain_index(A) == 3
    assert A.rank() == jordan(3).rank() == 2
    assert (A @ A).rank() == 1 and (A ** 3).is_zero()


def test_determinism():
    s = GenSpec(5, 2, seed=123)
    assert gen_with_index(s) == gen_with_index(s)
    assert gen_additive_pair(s) == gen_additive_pair(s)
    assert gen_product_pair(s) == gen_product_pair(s)
    assert gen_with_index(s) != gen_with_index(GenSpec(5, 2, seed=124))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data(), st.integers(0, 2**32))
def test_requested_index_via_rank_chain(n, data, seed):
    k = data.draw(st.integers(0, n))
    assert rank_chain_index(gen_with_index(GenSpec(n, k, seed=seed))) == k


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_unitary_permutation(n, seed):
    U = random_unitary_permutation(random.Random(seed), n)
    assert U @ U.H == Matrix.identity(n)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 2**32))
def test_additive_pair_hypotheses(n, k, seed):
    a, b, label = gen_additive_pair(GenSpec(n, min(k, n), seed=seed))
    assert label == "additive"
    assert (a @ b).is_zero() and (b @ a).is_zero() and (a.H @ b).is_zero()


def test_additive_needs_two_dims():
    with pytest.raises(SpecError):
        gen_additive_pair(GenSpec(1, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 3), st.integers(0, 2**32), st.sampled_from([1, 2]))
def test_product_pair_hypotheses(n, k, seed, family):
    a, b, label = gen_product_pair(GenSpec(n, min(k, n), seed=seed), family=family)
    assert label == ("product-normal" if family == 1 else "product-scalar")
    assert a @ b == b @ a
    assert a.H @ b == b @ a.H


def test_product_family_two_nontrivial_index():
    a, b, _ = gen_product_pair(GenSpec(4, 2, seed=3), family=2)
    assert rank_chain_index(a) == 2
    assert b == Matrix.identity(4).scale(b[0, 0])


def test_unknown_family():
    with pytest.raises(SpecError):
        gen_product_pair(GenSpec(2, 0), family=3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_additive_worked_pair(m):
    e11 = Matrix([[1]]).direct_sum(Matrix.zeros(2))
    b = Matrix.zeros(1).direct_sum(jordan(2))
    assert (e11 @ b).is_zero() and (b @ e11).is_zero() and (e11.H @ b).is_zero()
    lhs = m_weak_group(e11 + b, m)
    assert lhs == m_weak_group(e11, m) + m_weak_group(b, m) == e11


@pytest.mark.parametrize("m", [1, 2, 3])
def test_product_worked_pair(m):
    a, b = Matrix.diag([2, 0]), Matrix.diag([3, 5])
    expected = Matrix.diag([Fraction(1, 6), 0])
    wa, wb = m_weak_group(a, m), m_weak_group(b, m)
    assert m_weak_group(a @ b, m) == wa @ wb == wb @ wa == expected


@pytest.mark.parametrize("m", [1, 2])
def test_product_family_two_with_2i(m):
    a = gen_with_index(GenSpec(3, 2, seed=11))
    b = Matrix.identity(3).scale(2)
    assert a @ b == b @ a and a.H @ b == b @ a.H
    assert m_weak_group(a @ b, m) == m_weak_group(a, m) @ m_weak_group(b, m)
