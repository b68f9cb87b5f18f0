"""The Moore-Penrose, Drazin, group, core-EP and weak group inverses."""
from ginv import Matrix
from ginv.engine import (
    NotGroupInvertible,
    core_ep,
    drazin,
    group_inverse,
    mat_index,
    moore_penrose,
    weak_group,
)
from ginv.scalar import I

# A column with an imaginary entry: the pseudoinverse conjugates it.
v = Matrix([[1], [I]])
print("pinv([1, i]^T) =", moore_penrose(v).pretty())

# The index is where the rank of the powers stops dropping.
J3 = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
print("ind(J3) =", mat_index(J3), " ind(I) =", mat_index(Matrix.identity(3)))

# Invertible part plus a nilpotent block of index 2.
A = Matrix([[2, 0, 0], [0, 0, 1], [0, 0, 0]])
print("A:")
print(A.pretty())
print("index", mat_index(A))
print("Drazin:")
print(drazin(A).pretty())

# Group inverse exists only up to index 1.
try:
    group_inverse(A)
except NotGroupInvertible as exc:
    print("group inverse refused:", exc)

# An idempotent that is not Hermitian separates core-EP from weak group.
E = Matrix([[1, 1], [0, 0]])
print("core-EP of E:")
print(core_ep(E).pretty())
print("weak group of E:")
print(weak_group(E).pretty())
