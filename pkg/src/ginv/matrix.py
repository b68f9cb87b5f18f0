"""Dense exact matrices over Q(i).

All matrices are immutable.  Rank, solving and inversion use fraction-exact
Gauss-Jordan elimination with first-nonzero pivoting, so no conditioning
concerns arise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, GaussianRational, Rational, as_gaussian

__all__ = [
    "DimensionError",
    "ZeroMatrixError",
    "Matrix",
    "RankProfile",
]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class ZeroMatrixError(ValueError):
    """An operation that needs a nonzero matrix received the zero matrix."""


_F0 = Rational(0)


def _coerce(value) -> GaussianRational:
    g = as_gaussian(value)
    if g is NotImplemented:
        raise TypeError(f"cannot use {type(value).__name__} as an exact matrix entry")
    return g


class Matrix:
    """Dense matrix of :class:`GaussianRational` entries.

    Build from nested rows; ints and rationals are promoted::

        >>> Matrix([[1, 2], [3, 4]]).H
        Matrix([[1, 3], [2, 4]])
    """

    __slots__ = ("_rows", "rows", "cols", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_coerce(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged rows")
        self._set(data)

    def _set(self, data):
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _wrap(cls, data) -> "Matrix":
        m = object.__new__(cls)
        m._set(data)
        return m

    # --- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [_coerce(v) for v in values]
        n = len(vals)
        return cls._wrap(
            tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)])

    def direct_sum(self, other: "Matrix") -> "Matrix":
        """Block-diagonal ``self ⊕ other``."""
        top = tuple(r + (ZERO,) * other.cols for r in self._rows)
        bottom = tuple((ZERO,) * self.cols + r for r in other._rows)
        return Matrix._wrap(top + bottom)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError(f"cannot hstack {self.shape} and {other.shape}")
        return Matrix._wrap(tuple(a + b for a, b in zip(self._rows, other._rows)))

    # --- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def tolist(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._rows]

    def entries(self) -> list[GaussianRational]:
        return [v for r in self._rows for v in r]

    def column(self, j: int) -> "Matrix":
        return Matrix._wrap(tuple((r[j],) for r in self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap(tuple(tuple(self._rows[i][j] for j in cols) for i in rows))

    # --- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", op: str):
        if self.shape != other.shape:
            raise DimensionError(f"cannot {op} {self.shape} and {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "add")
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "subtract")
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows))
        )

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c) -> "Matrix":
        c = _coerce(c)
        return Matrix._wrap(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        # Work on raw (re, im) rationals and skip zeros; this is the hot loop.
        cols_b = [
            [(other._rows[k][j].re, other._rows[k][j].im) for k in range(other.rows)]
            for j in range(other.cols)
        ]
        out = []
        wrap = GaussianRational._raw
        for row in self._rows:
            arow = [(a.re, a.im) for a in row]
            nz = [(k, ar, ai) for k, (ar, ai) in enumerate(arow) if ar or ai]
            new_row = []
            for col in cols_b:
                sr = _F0
                si = _F0
                for k, ar, ai in nz:
                    br, bi = col[k]
                    if not br and not bi:
                        continue
                    if ai:
                        if bi:
                            sr += ar * br - ai * bi
                            si += ar * bi + ai * br
                        else:
                            sr += ar * br
                            si += ai * br
                    elif bi:
                        sr += ar * br
                        si += ar * bi
                    else:
                        sr += ar * br
                new_row.append(wrap(sr, si))
            out.append(tuple(new_row))
        return Matrix._wrap(tuple(out))

    def __pow__(self, exponent: int) -> "Matrix":
        if not isinstance(exponent, int):
            return NotImplemented
        if not self.is_square:
            raise DimensionError(f"power of non-square {self.shape} matrix")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Matrix.identity(self.rows)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix._wrap(
            tuple(tuple(self._rows[i][j].conjugate() for i in range(self.rows)) for j in range(self.cols))
        )

    conjugate_transpose = H

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self._rows)))

    # --- equality ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._rows))
        return self._hash

    def is_zero(self) -> bool:
        return not any(v for r in self._rows for v in r)

    # --- elimination -------------------------------------------------------

    def _rref_rows(self, augment: "Matrix | None" = None):
        """Gauss-Jordan on (self | augment); returns (rows, pivots)."""
        n_left = self.cols
        work = [list(r) for r in self._rows]
        if augment is not None:
            if augment.rows != self.rows:
                raise DimensionError(f"row mismatch {self.shape} vs {augment.shape}")
            for w, r in zip(work, augment._rows):
                w.extend(r)
        n_rows = len(work)
        pivots = []
        piv_r = 0
        for c in range(n_left):
            if piv_r == n_rows:
                break
            for i in range(piv_r, n_rows):
                if work[i][c]:
                    break
            else:
                continue
            if i != piv_r:
                work[piv_r], work[i] = work[i], work[piv_r]
            prow = work[piv_r]
            inv = prow[c].inverse()
            if inv != ONE:
                prow = [v * inv if v else v for v in prow]
                work[piv_r] = prow
            for r in range(n_rows):
                if r == piv_r:
                    continue
                f = work[r][c]
                if not f:
                    continue
                row = work[r]
                work[r] = [a - f * b if b else a for a, b in zip(row, prow)]
            pivots.append(c)
            piv_r += 1
        return work, pivots

    def rank_profile(self) -> "RankProfile":
        work, pivots = self._rref_rows()
        return RankProfile(len(pivots), tuple(pivots), Matrix._wrap(tuple(tuple(r) for r in work)))

    def rank(self) -> int:
        return len(self._rref_rows()[1])

    def solve(self, rhs: "Matrix") -> "Matrix | None":
        """A particular exact solution X of ``self @ X == rhs``, or None if inconsistent.

        Free variables are set to zero.
        """
        if self.rows != rhs.rows:
            raise DimensionError(f"cannot solve {self.shape} system with {rhs.shape} right side")
        work, pivots = self._rref_rows(rhs)
        n = self.cols
        r = len(pivots)
        for row in work[r:]:
            if any(row[n:]):
                return None
        out = [[ZERO] * rhs.cols for _ in range(n)]
        for i, c in enumerate(pivots):
            out[c] = work[i][n:]
        return Matrix._wrap(tuple(tuple(row) for row in out))

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionError(f"inverse of non-square {self.shape} matrix")
        work, pivots = self._rref_rows(Matrix.identity(self.rows))
        if len(pivots) != self.rows:
            raise ZeroDivisionError("matrix is singular")
        n = self.cols
        return Matrix._wrap(tuple(tuple(r[n:]) for r in work))

    def full_rank_factorization(self) -> tuple["Matrix", "Matrix"]:
        """``(F, G)`` with ``self == F @ G``; F = pivot columns, G = nonzero RREF rows."""
        work, pivots = self._rref_rows()
        if not pivots:
            raise ZeroMatrixError("full-rank factorization of the zero matrix")
        F = self.submatrix(range(self.rows), pivots)
        G = Matrix._wrap(tuple(tuple(work[i]) for i in range(len(pivots))))
        return F, G

    # --- column spaces -----------------------------------------------------

    def range_contained_in(self, other: "Matrix") -> bool:
        """Whether the column space of ``self`` lies inside that of ``other``."""
        if self.rows != other.rows:
            raise DimensionError(f"row mismatch {self.shape} vs {other.shape}")
        return other.hstack(self).rank() == other.rank()

    def range_equals(self, other: "Matrix") -> bool:
        return self.range_contained_in(other) and other.range_contained_in(self)

    # --- structure predicates ----------------------------------------------

    def _require_square(self, what: str):
        if not self.is_square:
            raise DimensionError(f"{what} needs a square matrix, got {self.shape}")

    def is_idempotent(self) -> bool:
        self._require_square("is_idempotent")
        return self @ self == self

    def is_nilpotent(self) -> bool:
        self._require_square("is_nilpotent")
        return (self ** self.rows).is_zero()

    def is_hermitian(self) -> bool:
        self._require_square("is_hermitian")
        return self.H == self

    def is_invertible(self) -> bool:
        self._require_square("is_invertible")
        return self.rank() == self.rows

    # --- display -----------------------------------------------------------

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def pretty(self) -> str:
        cells = [[str(v) for v in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


@dataclass(frozen=True)
class RankProfile:
    rank: int
    pivot_columns: tuple[int, ...]
    rref: Matrix


# Thin functional aliases, handy in tests and scripts.

def range_equal(a: Matrix, b: Matrix) -> bool:
    return a.range_equals(b)


def range_contained(a: Matrix, b: Matrix) -> bool:
    return a.range_contained_in(b)
