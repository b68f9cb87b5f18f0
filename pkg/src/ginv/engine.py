"""Generalized inverses of square matrices over Q(i).

Everything here is a closed-form exact computation:

* Moore-Penrose through a full-rank factorization ``A = F G``,
* Drazin as ``A^k (A^(2k+1))^+ A^k`` with ``k`` the index,
* core-EP as ``A^D A^k (A^k)^+``,
* weak group and m-weak group inverses as ``(A^cep)^(m+1) A^m``, plus three
  independent alternative routes for the latter.

Notation in docstrings: ``A^D`` Drazin, ``A^#`` group, ``A^cep`` core-EP,
``A^W`` weak group, ``A^Wm`` m-weak group inverse, ``A^+`` Moore-Penrose.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .matrix import DimensionError, Matrix

__all__ = [
    "NotGroupInvertible",
    "EngineInconsistency",
    "HypothesisViolated",
    "Path",
    "DrazinData",
    "MwgDecomposition",
    "PierceBlocks",
    "mat_index",
    "moore_penrose",
    "drazin",
    "drazin_data",
    "group_inverse",
    "core_ep",
    "weak_group",
    "m_weak_group",
    "m_weak_group_all_paths",
    "gg_inverse",
    "mwg_decompose",
    "core_nilpotent",
    "drazin_from_parts",
    "pierce_blocks",
    "mwg_from_blocks",
    "polar_idempotent",
    "recover_from_relaxed",
    "satisfies_relaxed_system",
]


class NotGroupInvertible(ValueError):
    def __init__(self, index: int):
        super().__init__(f"index {index} > 1")
        self.index = index


class EngineInconsistency(RuntimeError):
    """Two routes that must agree did not.  Indicates a bug, never expected."""


class HypothesisViolated(ValueError):
    """An input does not satisfy a formula's stated preconditions."""

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


class Path(str, enum.Enum):
    CORE_EP = "core-ep"          # (A^cep)^(m+1) A^m
    POWER_REDUCE = "power-reduce"  # A^(m-1) (A^m)^W
    WEAK_POWER = "weak-power"    # (A^W)^m A^(m-1)
    BLOCKS = "blocks"            # corner form relative to p = A A^cep


def _square(A: Matrix, what: str) -> None:
    if not A.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {A.shape}")


def mat_index(A: Matrix) -> int:
    """Least k >= 0 with rank(A^k) == rank(A^(k+1))."""
    _square(A, "mat_index")
    prev_rank = A.rows
    power = A
    k = 0
    while True:
        r = power.rank()
        if r == prev_rank:
            return k
        k += 1
        if r == 0:
            return k
        prev_rank = r
        power = power @ A


def moore_penrose(A: Matrix) -> Matrix:
    """``G* (G G*)^-1 (F* F)^-1 F*`` for a full-rank factorization ``A = F G``."""
    if A.is_zero():
        return Matrix.zeros(A.cols, A.rows)
    F, G = A.full_rank_factorization()
    Gh, Fh = G.H, F.H
    return Gh @ (G @ Gh).inverse() @ (F.H @ F).inverse() @ Fh


@dataclass(frozen=True)
class DrazinData:
    index: int
    drazin: Matrix
    core_ep: Matrix


def _drazin_at(A: Matrix, k: int, Ak: Matrix | None = None) -> Matrix:
    if k == 0:
        return A.inverse()
    if Ak is None:
        Ak = A ** k
    return Ak @ moore_penrose(Ak @ Ak @ A) @ Ak


def drazin(A: Matrix) -> Matrix:
    _square(A, "drazin")
    return _drazin_at(A, mat_index(A))


def drazin_data(A: Matrix) -> DrazinData:
    _square(A, "drazin")
    k = mat_index(A)
    if k == 0:
        inv = A.inverse()
        return DrazinData(0, inv, inv)
    Ak = A ** k
    D = _drazin_at(A, k, Ak)
    return DrazinData(k, D, D @ Ak @ moore_penrose(Ak))


def group_inverse(A: Matrix) -> Matrix:
    _square(A, "group_inverse")
    k = mat_index(A)
    if k > 1:
        raise NotGroupInvertible(k)
    return _drazin_at(A, k)


def core_ep(A: Matrix) -> Matrix:
    """Core-EP inverse; ``A A^cep`` is the orthogonal projector onto range(A^k)."""
    return drazin_data(A).core_ep


def weak_group(A: Matrix) -> Matrix:
    """Weak group inverse ``(A^cep)^2 A``."""
    C = core_ep(A)
    return C @ C @ A


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def m_weak_group(A: Matrix, m: int, path: Path | str = Path.CORE_EP) -> Matrix:
    """m-weak group inverse of ``A`` along the chosen computation path."""
    _square(A, "m_weak_group")
    _check_m(m)
    path = Path(path)
    if path is Path.CORE_EP:
        C = core_ep(A)
        return C ** (m + 1) @ A ** m
    if path is Path.POWER_REDUCE:
        return A ** (m - 1) @ weak_group(A ** m)
    if path is Path.WEAK_POWER:
        return weak_group(A) ** m @ A ** (m - 1)
    return mwg_from_blocks(pierce_blocks(A, m), m)


def m_weak_group_all_paths(A: Matrix, m: int) -> Matrix:
    """Compute by every path and insist on exact agreement."""
    results = {p: m_weak_group(A, m, p) for p in Path}
    ref = results[Path.CORE_EP]
    for p, X in results.items():
        if X != ref:
            raise EngineInconsistency(f"path {p.value} disagrees with {Path.CORE_EP.value}")
    return ref


def gg_inverse(A: Matrix) -> Matrix:
    """GG inverse ``(A^cep)^3 A^2``."""
    _square(A, "gg_inverse")
    C = core_ep(A)
    return C @ C @ C @ A @ A


@dataclass(frozen=True)
class MwgDecomposition:
    """``A = x + y`` with x group invertible, y nilpotent, x* A^(m-1) y = y x = 0."""

    m: int
    x: Matrix
    y: Matrix


def mwg_decompose(A: Matrix, m: int) -> MwgDecomposition:
    z = m_weak_group(A, m)
    x = A @ A @ z
    return MwgDecomposition(m, x, A - x)


def core_nilpotent(A: Matrix) -> tuple[Matrix, Matrix]:
    """Core-nilpotent split ``A = A^2 A^D + (A - A^2 A^D)``."""
    _square(A, "core_nilpotent")
    a1 = A @ A @ drazin(A)
    return a1, A - a1


def drazin_from_parts(a1: Matrix, a2: Matrix, k: int) -> Matrix:
    """Drazin inverse of ``a1 + a2`` from group-invertible ``a1`` and nilpotent ``a2``.

    Requires ``a2 a1 = 0`` and ``a2^k = 0``; returns
    ``a1^# + sum_{j=1}^{k-1} (a1^#)^(j+1) a2^j``.
    """
    if a1.shape != a2.shape:
        raise DimensionError(f"parts have shapes {a1.shape} and {a2.shape}")
    if k < 1:
        raise HypothesisViolated("k must be positive")
    if not (a2 @ a1).is_zero():
        raise HypothesisViolated("a2 a1 = 0")
    if not (a2 ** k).is_zero():
        raise HypothesisViolated(f"a2^{k} = 0")
    try:
        g = group_inverse(a1)
    except NotGroupInvertible as exc:
        raise HypothesisViolated("a1 group invertible") from exc
    total = g
    g_pow = g @ g
    a2_pow = a2
    for _ in range(1, k):
        total = total + g_pow @ a2_pow
        g_pow = g_pow @ g
        a2_pow = a2_pow @ a2
    return total


@dataclass(frozen=True)
class PierceBlocks:
    """Splitting of A relative to the Hermitian idempotent ``p = A A^cep``.

    ``t = pAp``, ``s = pA(I-p)``, ``n = (I-p)A(I-p)`` and ``(I-p)Ap = 0``.
    ``c[i-1]`` holds ``c_i`` with ``c_1 = s``, ``c_{i+1} = t c_i + s n^i``,
    which is the upper-right block of ``A^i``.
    """

    p: Matrix
    t: Matrix
    s: Matrix
    n: Matrix
    c: tuple[Matrix, ...] = field(default=())


def pierce_blocks(A: Matrix, m: int) -> PierceBlocks:
    _square(A, "pierce_blocks")
    _check_m(m)
    p = A @ core_ep(A)
    q = Matrix.identity(A.rows) - p
    t = p @ A @ p
    s = p @ A @ q
    n = q @ A @ q
    if not (q @ A @ p).is_zero():
        raise EngineInconsistency("lower-left corner (I-p) A p is not zero")
    c = [s]
    n_pow = n
    for _ in range(1, m):
        c.append(t @ c[-1] + s @ n_pow)
        n_pow = n_pow @ n
    return PierceBlocks(p, t, s, n, tuple(c))


def corner_inverse(blocks: PierceBlocks) -> Matrix:
    """Inverse of ``t`` inside ``p R p``, i.e. the group inverse of t."""
    try:
        t_inv = group_inverse(blocks.t)
    except NotGroupInvertible as exc:
        raise EngineInconsistency("corner block t is not group invertible") from exc
    if t_inv @ blocks.t != blocks.p:
        raise EngineInconsistency("corner block t is not invertible in pRp")
    return t_inv


def mwg_from_blocks(blocks: PierceBlocks, m: int) -> Matrix:
    """``t^-1 + t^-(m+1) c_m`` with ``t^-1`` the corner inverse."""
    _check_m(m)
    if len(blocks.c) < m:
        raise ValueError(f"need c_1..c_{m}, have {len(blocks.c)}")
    t_inv = corner_inverse(blocks)
    return t_inv + t_inv ** (m + 1) @ blocks.c[m - 1]


def polar_idempotent(A: Matrix, m: int) -> Matrix:
    """Idempotent ``p = I - A A^Wm``; ``A + p`` is invertible and ``A^Wm = A^D (I - p)``."""
    return Matrix.identity(A.rows) - A @ m_weak_group(A, m)


def satisfies_relaxed_system(A: Matrix, z: Matrix, m: int) -> bool:
    """``A z^2 = z``, ``(A^m)* A^(m+1) z`` Hermitian, ``A^n = A z A^n`` for some n <= ind(A)+1."""
    if A @ z @ z != z:
        return False
    Am = A ** m
    if not (Am.H @ Am @ A @ z).is_hermitian():
        return False
    k = mat_index(A)
    Az = A @ z
    An = Matrix.identity(A.rows)
    for _ in range(k + 2):
        if Az @ An == An:
            return True
        An = An @ A
    return False


def recover_from_relaxed(A: Matrix, z: Matrix, m: int) -> Matrix:
    """Recover ``A^Wm = A A^D z`` from any solution ``z`` of the relaxed system."""
    _square(A, "recover_from_relaxed")
    _check_m(m)
    if not satisfies_relaxed_system(A, z, m):
        raise HypothesisViolated("z does not satisfy the relaxed system")
    return A @ drazin(A) @ z
