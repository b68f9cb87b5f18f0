"""Engine tests.

Independent oracles used here:
* structural: for A = S (C ⊕ N) S^-1 the Drazin inverse is S (C^-1 ⊕ 0) S^-1
  and the index is the nilpotency index of N (found by brute-force powers);
* core-EP via A^k (A^(k+1))^+, a different formula from the engine's;
* m-weak group via the linear system A^(k+1) Y = (A^cep)^m A^m, X = A^k Y.
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import entries, jordan, matrices, square_matrices
from ginv.engine import (
    EngineInconsistency,
    HypothesisViolated,
    NotGroupInvertible,
    Path,
    core_ep,
    core_nilpotent,
    drazin,
    drazin_data,
    drazin_from_parts,
    gg_inverse,
    group_inverse,
    m_weak_group,
    m_weak_group_all_paths,
    mat_index,
    moore_penrose,
    mwg_decompose,
    mwg_from_blocks,
    pierce_blocks,
    polar_idempotent,
    recover_from_relaxed,
    satisfies_relaxed_system,
    weak_group,
)
from ginv.matrix import DimensionError, Matrix
from ginv.scalar import I

A_IDEM = Matrix([[1, 1], [0, 0]])
E11 = Matrix([[1, 0], [0, 0]])


# --- oracles -----------------------------------------------------------------


@st.composite
def structured(draw, max_dim=4):
    """(A, S, C, N) with A = S (C ⊕ N) S^-1; C or N may be empty (None)."""
    n = draw(st.integers(1, max_dim))
    r = draw(st.integers(0, n))
    C = None
    if r < n:
        C = draw(matrices(rows=n - r, cols=n - r))
        assume(C.is_invertible())
    N = None
    if r:
        N = Matrix([[draw(entries) if j > i else 0 for j in range(r)] for i in range(r)])
    S = draw(matrices(rows=n, cols=n))
    assume(S.is_invertible())
    if C is None:
        core = N
    elif N is None:
        core = C
    else:
        core = C.direct_sum(N)
    return S @ core @ S.inverse(), S, C, N


def brute_nilpotency_index(N):
    if N is None:
        return 0
    P = N
    j = 1
    while not P.is_zero():
        P = P @ N
        j += 1
    return j


def structural_drazin(S, C, N):
    Sinv = S.inverse()
    if C is None:
        return Matrix.zeros(S.rows)
    core = C.inverse() if N is None else C.inverse().direct_sum(Matrix.zeros(N.rows))
    return S @ core @ Sinv


def oracle_core_ep(A):
    k = mat_index(A)
    return A ** k @ moore_penrose(A ** (k + 1))


def oracle_mwg(A, m):
    k = mat_index(A)
    C = oracle_core_ep(A)
    Y = (A ** (k + 1)).solve(C ** m @ A ** m)
    assert Y is not None
    return A ** k @ Y


def def11_holds(A, X, m):
    k = mat_index(A)
    Ak = A ** k
    return (A @ X @ X == X and X @ Ak @ A == Ak
            and Ak.H @ A ** (m + 1) @ X == Ak.H @ A ** m)


# --- index ---------------------------------------------------------------------


def test_index_examples():
    assert mat_index(Matrix.identity(3)) == 0
    assert mat_index(jordan(3)) == 3
    assert mat_index(A_IDEM) == 1
    assert mat_index(Matrix.zeros(2)) == 1
    with pytest.raises(DimensionError):
        mat_index(Matrix([[1, 2]]))


@settings(max_examples=40, deadline=None)
@given(structured())
def test_index_matches_structure(case):
    A, S, C, N = case
    assert mat_index(A) == brute_nilpotency_index(N)


# --- Moore-Penrose -----------------------------------------------------------


def test_moore_penrose_examples():
    assert moore_penrose(Matrix.diag([2, 0])) == Matrix.diag([Fraction(1, 2), 0])
    assert moore_penrose(Matrix([[1], [I]])) == Matrix([[Fraction(1, 2), -I / 2]])
    assert moore_penrose(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)


@given(matrices())
def test_penrose_equations(A):
    X = moore_penrose(A)
    assert X.shape == (A.cols, A.rows)
    assert A @ X @ A == A
    assert X @ A @ X == X
    assert (A @ X).H == A @ X
    assert (X @ A).H == X @ A


# --- Drazin / group ------------------------------------------------------------


def test_drazin_examples():
    assert drazin(jordan(2)) == Matrix.zeros(2)
    assert drazin(Matrix.diag([3, 0])) == Matrix.diag([Fraction(1, 3), 0])
    assert drazin(A_IDEM) == A_IDEM


@settings(max_examples=40, deadline=None)
@given(structured())
def test_drazin_matches_structure(case):
    A, S, C, N = case
    D = drazin(A)
    assert D == structural_drazin(S, C, N)
    k = mat_index(A)
    assert A @ D @ D == D and A @ D == D @ A and D @ A ** (k + 1) == A ** k


def test_group_inverse():
    assert group_inverse(Matrix.identity(2)) == Matrix.identity(2)
    assert group_inverse(A_IDEM) == A_IDEM
    with pytest.raises(NotGroupInvertible) as exc:
        group_inverse(jordan(2))
    assert exc.value.index == 2
    assert "index 2 > 1" in str(exc.value)


# --- core-EP / weak group ----------------------------------------------------


def test_core_ep_examples():
    assert core_ep(jordan(2)) == Matrix.zeros(2)
    assert core_ep(A_IDEM) == E11
    assert core_ep(Matrix.diag([2, 0])) == Matrix.diag([Fraction(1, 2), 0])


@settings(max_examples=50, deadline=None)
@given(square_matrices())
def test_core_ep_equations_and_oracle(A):
    dd = drazin_data(A)
    X, k = dd.core_ep, dd.index
    assert A @ X @ X == X
    assert (A @ X).is_hermitian() and (A @ X).is_idempotent()
    assert X @ A ** (k + 1) == A ** k
    assert X == oracle_core_ep(A)


def test_weak_group_examples():
    assert weak_group(jordan(3)) == Matrix.zeros(3)
    assert weak_group(A_IDEM) == A_IDEM
    B = Matrix([[2, 1], [1, 1]])
    assert weak_group(B) == B.inverse()


@settings(max_examples=40, deadline=None)
@given(square_matrices())
def test_weak_group_system(A):
    X = weak_group(A)
    k = mat_index(A)
    w = A.H @ A @ A @ X
    assert A @ X @ X == X and w.H == w and A ** k == X @ A ** (k + 1)
    if k <= 1:
        assert X == group_inverse(A)


# --- m-weak group --------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mwg_examples(m):
    assert m_weak_group_all_paths(jordan(3), m) == Matrix.zeros(3)
    assert m_weak_group_all_paths(A_IDEM, m) == A_IDEM
    assert def11_holds(A_IDEM, A_IDEM, m)


@settings(max_examples=40, deadline=None)
@given(square_matrices(), st.integers(1, 3))
def test_mwg_paths_agree_and_match_oracle(A, m):
    X = m_weak_group_all_paths(A, m)
    assert X == oracle_mwg(A, m)
    assert def11_holds(A, X, m)
    for p in Path:
        assert m_weak_group(A, m, p) == X


@settings(max_examples=30, deadline=None)
@given(square_matrices(max_dim=5))
def test_m1_is_weak_group(A):
    assert m_weak_group(A, 1) == weak_group(A)


def test_mwg_rejects_bad_m():
    with pytest.raises(ValueError):
        m_weak_group(A_IDEM, 0)
    with pytest.raises(DimensionError):
        m_weak_group(Matrix([[1, 2]]), 1)


def test_path_names():
    assert Path("core-ep") is Path.CORE_EP
    assert m_weak_group(A_IDEM, 2, "blocks") == A_IDEM


# --- GG inverse --------------------------------------------------------------


def test_gg_examples():
    B = Matrix([[1, 2], [0, 1]])
    assert gg_inverse(B) == B.inverse()
    assert gg_inverse(jordan(3)) == Matrix.zeros(3)
    assert gg_inverse(A_IDEM) == m_weak_group(A_IDEM, 2) == A_IDEM


@settings(max_examples=30, deadline=None)
@given(square_matrices())
def test_gg_equalities(A):
    X = gg_inverse(A)
    W = weak_group(A)
    assert X == W @ W @ A == m_weak_group(A, 2)
    C = core_ep(A)
    assert A @ X == C @ C @ A @ A
    assert X.range_contained_in(A ** mat_index(A))


# --- decompositions ----------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3])
def test_decompose_examples(m):
    d = mwg_decompose(jordan(3), m)
    assert d.x == Matrix.zeros(3) and d.y == jordan(3)
    B = Matrix([[1, 2], [3, 4]])
    d = mwg_decompose(B, m)
    assert d.x == B and d.y == Matrix.zeros(2)
    d = mwg_decompose(A_IDEM, m)
    assert d.x == A_IDEM and d.y == Matrix.zeros(2)


@settings(max_examples=40, deadline=None)
@given(square_matrices(), st.integers(1, 3))
def test_decomposition_conditions(A, m):
    d = mwg_decompose(A, m)
    z = m_weak_group(A, m)
    assert d.x + d.y == A
    assert (d.y @ d.x).is_zero()
    assert (d.x.H @ A ** (m - 1) @ d.y).is_zero()
    assert mat_index(d.x) <= 1
    assert d.y.is_nilpotent()
    assert group_inverse(d.x) == z


def test_core_nilpotent_examples():
    a1, a2 = core_nilpotent(Matrix.diag([2, 0]))
    assert a1 == Matrix.diag([2, 0]) and a2.is_zero()
    a1, a2 = core_nilpotent(jordan(2))
    assert a1.is_zero() and a2 == jordan(2)
    A = Matrix([[1]]).direct_sum(jordan(2))
    a1, a2 = core_nilpotent(A)
    assert a1 == Matrix([[1]]).direct_sum(Matrix.zeros(2))
    assert a2 == Matrix.zeros(1).direct_sum(jordan(2))


@settings(max_examples=30, deadline=None)
@given(structured())
def test_core_nilpotent_structure(case):
    A, S, C, N = case
    a1, a2 = core_nilpotent(A)
    assert a1 + a2 == A
    assert mat_index(a1) <= 1 and a2.is_nilpotent()
    assert (a1 @ a2).is_zero() and (a2 @ a1).is_zero()


def test_drazin_from_parts_examples():
    a1 = Matrix([[2, 1], [0, 0]])
    assert drazin_from_parts(a1, Matrix.zeros(2), 1) == group_inverse(a1)
    assert drazin_from_parts(Matrix.zeros(3), jordan(3), 3) == Matrix.zeros(3)


def test_drazin_from_parts_hypotheses():
    with pytest.raises(HypothesisViolated, match="a2 a1"):
        drazin_from_parts(Matrix.identity(2), jordan(2), 2)
    with pytest.raises(HypothesisViolated, match=r"a2\^1"):
        drazin_from_parts(Matrix.zeros(2), jordan(2), 1)
    with pytest.raises(HypothesisViolated, match="group invertible"):
        drazin_from_parts(jordan(3), Matrix.zeros(3), 1)


@settings(max_examples=30, deadline=None)
@given(square_matrices(), st.integers(1, 3))
def test_drazin_from_parts_on_decomposition(A, m):
    d = mwg_decompose(A, m)
    k = max(1, mat_index(d.y))
    assert drazin_from_parts(d.x, d.y, k) == drazin(A)


# --- corner blocks -----------------------------------------------------------


def test_blocks_examples():
    B = Matrix([[1, 2], [3, 4]])
    blk = pierce_blocks(B, 2)
    assert blk.p == Matrix.identity(2) and blk.t == B
    assert blk.s.is_zero() and blk.n.is_zero()
    assert mwg_from_blocks(blk, 2) == B.inverse()

    blk = pierce_blocks(jordan(3), 2)
    assert blk.p.is_zero() and blk.t.is_zero() and blk.s.is_zero() and blk.n == jordan(3)
    assert mwg_from_blocks(blk, 2).is_zero()

    blk = pierce_blocks(A_IDEM, 1)
    assert blk.p == E11 and blk.t == E11
    assert blk.s == Matrix([[0, 1], [0, 0]]) and blk.n.is_zero()
    assert blk.c == (blk.s,)
    assert mwg_from_blocks(blk, 1) == A_IDEM


@settings(max_examples=30, deadline=None)
@given(square_matrices(), st.integers(1, 3))
def test_blocks_invariants(A, m):
    blk = pierce_blocks(A, m)
    q = Matrix.identity(A.rows) - blk.p
    assert blk.p @ blk.p == blk.p == blk.p.H
    assert blk.t + blk.s + blk.n == A
    assert (q @ A @ blk.p).is_zero()
    assert blk.n.is_nilpotent()
    assert group_inverse(blk.t) @ blk.t == blk.p
    for i in range(1, m):
        assert blk.c[i] == blk.t @ blk.c[i - 1] + blk.s @ blk.n ** i
    assert len(blk.c) == m
    assert mwg_from_blocks(blk, m) == m_weak_group(A, m)


def test_mwg_from_blocks_needs_enough_c():
    blk = pierce_blocks(A_IDEM, 1)
    with pytest.raises(ValueError):
        mwg_from_blocks(blk, 2)


def test_mwg_from_blocks_detects_bad_corner():
    blk = pierce_blocks(A_IDEM, 1)
    from dataclasses import replace
    bad = replace(blk, t=Matrix.zeros(2))
    with pytest.raises(EngineInconsistency):
        mwg_from_blocks(bad, 1)


# --- polar idempotent ----------------------------------------------------------


def test_polar_examples():
    B = Matrix([[1, 2], [3, 4]])
    assert polar_idempotent(B, 2).is_zero()
    p = polar_idempotent(jordan(3), 1)
    assert p == Matrix.identity(3)
    assert (jordan(3) + p).is_invertible()
    p = polar_idempotent(A_IDEM, 1)
    assert p == Matrix([[0, -1], [0, 1]])
    assert A_IDEM + p == Matrix.identity(2)


@settings(max_examples=30, deadline=None)
@given(square_matrices(), st.integers(1, 3))
def test_polar_properties(A, m):
    p = polar_idempotent(A, m)
    D = drazin(A)
    q = Matrix.identity(A.rows) - p
    assert p @ p == p
    assert (A + p).is_invertible()
    assert (D.H @ A ** m @ p).is_zero()
    assert D.range_equals(q)
    assert D @ q == m_weak_group(A, m)


# --- relaxed system recovery -------------------------------------------------


def test_recover_examples():
    for m in (1, 2, 3):
        X = m_weak_group(A_IDEM, m)
        assert recover_from_relaxed(A_IDEM, X, m) == X
    B = Matrix([[1, 2], [3, 4]])
    assert recover_from_relaxed(B, B.inverse(), 2) == B.inverse()


def test_recover_rejects_non_solutions():
    with pytest.raises(HypothesisViolated):
        recover_from_relaxed(Matrix.identity(2), Matrix.zeros(2), 1)


@settings(max_examples=25, deadline=None)
@given(square_matrices(max_dim=3), st.integers(1, 3), st.lists(matrices(rows=3, cols=3), max_size=4))
def test_recover_under_perturbation(A, m, ws):
    """Perturb by (I - A A^D) w and keep only candidates that still solve the system."""
    X = m_weak_group(A, m)
    P = Matrix.identity(A.rows) - A @ drazin(A)
    n = A.rows
    candidates = [X] + [X + P @ w.submatrix(range(n), range(n)) for w in ws]
    kept = [z for z in candidates if satisfies_relaxed_system(A, z, m)]
    assert X in kept
    for z in kept:
        assert recover_from_relaxed(A, z, m) == X
