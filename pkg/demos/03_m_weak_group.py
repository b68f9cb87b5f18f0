"""m-weak group inverses: four ways to compute one, and what they decompose."""
from ginv import Matrix
from ginv.engine import (
    Path,
    core_ep,
    m_weak_group,
    m_weak_group_all_paths,
    mwg_decompose,
    pierce_blocks,
    mwg_from_blocks,
    polar_idempotent,
)
from ginv.generators import GenSpec, gen_with_index

A = gen_with_index(GenSpec(dim=4, index=2, seed=2000))
print("A (index 2):")
print(A.pretty())

for m in (1, 2, 3):
    X = m_weak_group_all_paths(A, m)   # raises if any path disagrees
    print(f"m={m}: all four paths agree;", "equals core-EP" if X == core_ep(A) else "differs from core-EP")

for p in Path:
    print(p.value, "->", m_weak_group(A, 2, p) == m_weak_group(A, 2))

# a = x + y with x group invertible and y nilpotent.
d = mwg_decompose(A, 2)
print("x + y == A:", d.x + d.y == A, " y x == 0:", (d.y @ d.x).is_zero(), " y nilpotent:", d.y.is_nilpotent())

# Corner blocks relative to p = A A^cep.
blk = pierce_blocks(A, 2)
print("t + s + n == A:", blk.t + blk.s + blk.n == A)
print("corner form matches:", mwg_from_blocks(blk, 2) == m_weak_group(A, 2))

# The polar-like idempotent makes A + p invertible.
p = polar_idempotent(A, 2)
print("p^2 == p:", p @ p == p, " A + p invertible:", (A + p).is_invertible())
