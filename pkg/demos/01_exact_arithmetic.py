"""Exact Gaussian-rational scalars and matrices.

Nothing here ever touches a float: every entry is p/q + (r/s) i.
"""
from fractions import Fraction

from ginv import GaussianRational, Matrix
from ginv.scalar import I

z = GaussianRational(Fraction(1, 2), 3)   # 1/2 + 3i
print(z, "*", z.conjugate(), "=", z * z.conjugate())   # the norm, a real rational
print("1/z =", 1 / z)
print("parsed:", GaussianRational.parse("-4/6", "2"))  # canonical form: -2/3+2i

# Matrices accept ints, Fractions and Gaussian rationals.
A = Matrix([[1, I], [0, 2]])
print(A.pretty())
print("conjugate transpose:")
print(A.H.pretty())
print("(AB)* == B* A*:", (A @ A.T).H == A.T.H @ A.H)

# Elimination is exact, so rank never depends on a threshold.
B = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
prof = B.rank_profile()
print("rank", prof.rank, "pivots", prof.pivot_columns)
print(prof.rref.pretty())

F, G = B.full_rank_factorization()
print("B = F G:", F @ G == B, F.shape, G.shape)

# Inconsistent systems give None rather than a least-squares guess.
print(B.solve(Matrix([[1], [0], [0]])))
