"""Seeded generators of test matrices with prescribed structure.

All randomness comes from a private :class:`random.Random` seeded from the
spec, so every generator is a pure function of its arguments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import NamedTuple

from .engine import mat_index
from .matrix import Matrix
from .scalar import ONE, ZERO, GaussianRational, Rational

__all__ = [
    "SpecError",
    "GenSpec",
    "GeneratedPair",
    "gen_with_index",
    "gen_additive_pair",
    "gen_product_pair",
    "random_unitary_permutation",
]

MAX_DIM = 8
_UNITS = (ONE, -ONE, GaussianRational(0, 1), GaussianRational(0, -1))


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    dim: int
    index: int
    entry_bound: int = 3
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise SpecError(f"dim must be in [1, {MAX_DIM}], got {self.dim}")
        if not 0 <= self.index <= self.dim:
            raise SpecError(f"index must be in [0, dim={self.dim}], got {self.index}")
        if self.entry_bound < 1:
            raise SpecError("entry_bound must be positive")
        if not 0 <= self.seed < 2**64:
            raise SpecError("seed must be a 64-bit unsigned integer")

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{self.dim}:{self.index}:{self.entry_bound}:{salt}")


class GeneratedPair(NamedTuple):
    a: Matrix
    b: Matrix
    label: str


def _rational(rng: random.Random, bound: int, nonzero: bool = False) -> Rational:
    while True:
        q = Rational(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def _scalar(rng: random.Random, bound: int, nonzero: bool = False) -> GaussianRational:
    while True:
        re = _rational(rng, bound)
        im = _rational(rng, bound) if rng.random() < 1 / 3 else Rational(0)
        z = GaussianRational(re, im)
        if z or not nonzero:
            return z


def _random_invertible(rng: random.Random, n: int, bound: int) -> Matrix:
    while True:
        M = Matrix([[_scalar(rng, bound) for _ in range(n)] for _ in range(n)])
        if M.is_invertible():
            return M


def _random_unimodular(rng: random.Random, n: int) -> Matrix:
    """``L U`` with unit-triangular factors and small Gaussian-integer entries."""
    def small():
        return GaussianRational(rng.randint(-1, 1), rng.randint(-1, 1) if rng.random() < 0.25 else 0)

    L = Matrix([[ONE if i == j else (small() if j < i else ZERO) for j in range(n)] for i in range(n)])
    U = Matrix([[ONE if i == j else (small() if j > i else ZERO) for j in range(n)] for i in range(n)])
    return L @ U


def _nilpotent(rng: random.Random, size: int, index: int, bound: int) -> Matrix:
    """Shift-patterned nilpotent of nilpotency index exactly ``index``."""
    blocks = [index]
    remaining = size - index
    while remaining:
        b = rng.randint(1, min(index, remaining))
        blocks.append(b)
        remaining -= b
    rng.shuffle(blocks)
    super_diag = []
    for b in blocks:
        super_diag.extend(_scalar(rng, bound, nonzero=True) for _ in range(b - 1))
        super_diag.append(ZERO)
    return Matrix([[super_diag[i] if j == i + 1 else ZERO for j in range(size)] for i in range(size)])


def gen_with_index(spec: GenSpec) -> Matrix:
    """``S (C ⊕ N) S^-1`` with C invertible and N nilpotent of index ``spec.index``."""
    rng = spec.rng("index")
    n, k, bound = spec.dim, spec.index, spec.entry_bound
    r = 0 if k == 0 else rng.randint(k, n)
    if r == n:
        core = _nilpotent(rng, n, k, bound)
    elif r == 0:
        core = _random_invertible(rng, n, bound)
    else:
        core = _random_invertible(rng, n - r, bound).direct_sum(_nilpotent(rng, r, k, bound))
    S = _random_unimodular(rng, n)
    A = S @ core @ S.inverse()
    assert mat_index(A) == k, "generator produced the wrong index"
    return A


def random_unitary_permutation(rng: random.Random, n: int) -> Matrix:
    """Permutation matrix with entries scaled by units in {±1, ±i}; ``U* = U^-1``."""
    perm = list(range(n))
    rng.shuffle(perm)
    units = [rng.choice(_UNITS) for _ in range(n)]
    return Matrix([[units[i] if perm[i] == j else ZERO for j in range(n)] for i in range(n)])


def gen_additive_pair(spec: GenSpec) -> GeneratedPair:
    """Pair with ``ab = ba = 0`` and ``a* b = 0``.

    The two matrices live on complementary coordinate blocks, each with
    index at most ``spec.index``, then share a unitary change of basis.
    """
    if spec.dim < 2:
        raise SpecError("additive pairs need dim >= 2")
    rng = spec.rng("additive")
    d1 = rng.randint(1, spec.dim - 1)
    d2 = spec.dim - d1
    seed_a, seed_b = rng.getrandbits(63), rng.getrandbits(63)
    a_part = gen_with_index(GenSpec(d1, rng.randint(0, min(spec.index, d1)), spec.entry_bound, seed_a))
    b_part = gen_with_index(GenSpec(d2, rng.randint(0, min(spec.index, d2)), spec.entry_bound, seed_b))
    a = a_part.direct_sum(Matrix.zeros(d2))
    b = Matrix.zeros(d1).direct_sum(b_part)
    U = random_unitary_permutation(rng, spec.dim)
    return GeneratedPair(U @ a @ U.H, U @ b @ U.H, "additive")


def gen_product_pair(spec: GenSpec, family: int | None = None) -> GeneratedPair:
    """Pair with ``ab = ba`` and ``a* b = b a*``.

    Family 1 is a simultaneously unitarily diagonalized pair ``U D1 U*``,
    ``U D2 U*`` (zeros on the diagonal are allowed, so ``a`` may be singular).
    Family 2 is an arbitrary ``a`` of the requested index with ``b = r I``,
    ``r`` a nonzero real rational.
    """
    rng = spec.rng("product")
    if family is None:
        family = rng.choice((1, 2))
    n, bound = spec.dim, spec.entry_bound
    if family == 1:
        d1 = [ZERO if rng.random() < 1 / 3 else _scalar(rng, bound) for _ in range(n)]
        d2 = [ZERO if rng.random() < 1 / 4 else _scalar(rng, bound) for _ in range(n)]
        U = random_unitary_permutation(rng, n)
        return GeneratedPair(U @ Matrix.diag(d1) @ U.H, U @ Matrix.diag(d2) @ U.H, "product-normal")
    if family == 2:
        a = gen_with_index(replace(spec, seed=rng.getrandbits(63)))
        r = _rational(rng, bound, nonzero=True)
        return GeneratedPair(a, Matrix.identity(n).scale(r), "product-scalar")
    raise SpecError(f"unknown product family {family}")
