"""Exact rational scalars and dense matrices.

Scalars are ``fractions.Fraction``: arbitrary precision, always in lowest
terms with a positive denominator, so equality is bit-exact and ``str()``
yields the canonical ``"p/q"`` (or ``"p"``) form used everywhere in this
package. :class:`RationalMatrix` is a small immutable dense matrix over
those scalars with exact kernels: multiplication, a fraction-free
determinant, a Gauss-Jordan inverse and the sum of all cofactors. No
floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "ShapeError",
    "SingularMatrixError",
    "as_rational",
    "cofactor_sum",
    "det",
    "hadamard",
    "inverse",
    "mat_mul",
]


class ShapeError(ValueError):
    """Matrix dimensions do not admit the requested operation."""


class SingularMatrixError(ValueError):
    """The matrix has no inverse; carries the rank that elimination found."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular: rank {rank} of {size}")
        self.rank = rank
        self.size = size


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a Fraction, or a string like ``"-3/7"`` to a Fraction.

    Floats are rejected on purpose: exactness is the whole point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class RationalMatrix:
    """Immutable dense matrix of exact rationals.

    Supports ``+``, ``-``, scalar ``*``, matrix ``@``, ``.T`` and exact
    entrywise ``==``. Zero-dimensional shapes (``0x0``, ``1x0``, ...) are
    legal; they show up as the incidence/orientation matrices of a
    single-vertex tree.

    >>> m = RationalMatrix([[1, 2], [3, "1/2"]])
    >>> m[1, 1]
    Fraction(1, 2)
    >>> (m @ RationalMatrix.identity(2)) == m
    True
    """

    __slots__ = ("_data", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int | str | Fraction]], *, cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if data:
            ncols = len(data[0])
            if any(len(row) != ncols for row in data):
                raise ShapeError("rows have unequal lengths")
            if cols is not None and cols != ncols:
                raise ShapeError(f"rows have {ncols} entries, expected {cols}")
        else:
            ncols = 0 if cols is None else cols
        self._data = data
        self._ncols = ncols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls(((zero,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RationalMatrix":
        one = Fraction(1)
        return cls(((one,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[int | str | Fraction]) -> "RationalMatrix":
        vals = [as_rational(v) for v in values]
        n = len(vals)
        zero = Fraction(0)
        return cls(
            (tuple(vals[i] if i == j else zero for j in range(n)) for i in range(n)),
            cols=n,
        )

    @classmethod
    def column(cls, values: Iterable[int | str | Fraction]) -> "RationalMatrix":
        return cls(((v,) for v in values), cols=1)

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._data), self._ncols)

    @property
    def is_square(self) -> bool:
        return len(self._data) == self._ncols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    @property
    def T(self) -> "RationalMatrix":
        if not self._data or not self._ncols:
            return RationalMatrix(((),) * self._ncols, cols=len(self._data))
        return RationalMatrix(zip(*self._data), cols=len(self._data))

    def _require_same_shape(self, other: "RationalMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise ShapeError(f"cannot {op} a {self.rows}x{self.cols} and a {other.rows}x{other.cols} matrix")

    def __add__(self, other: object) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other, "add")
        return RationalMatrix(
            (tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            cols=self._ncols,
        )

    def __sub__(self, other: object) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other, "subtract")
        return RationalMatrix(
            (tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            cols=self._ncols,
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix((tuple(-x for x in row) for row in self._data), cols=self._ncols)

    def __mul__(self, scalar: object) -> "RationalMatrix":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return RationalMatrix((tuple(x * scalar for x in row) for row in self._data), cols=self._ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: object) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product; raises :class:`ShapeError` on an inner-dimension mismatch."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ")
    bt = b.T
    zero = Fraction(0)
    out = []
    for arow in a:
        out.append(tuple(sum((x * y for x, y in zip(arow, bcol) if x and y), zero) for bcol in bt))
    return RationalMatrix(out, cols=b.cols)


def hadamard(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Entrywise product of two equally shaped matrices."""
    a._require_same_shape(b, "entrywise-multiply")
    return RationalMatrix(
        (tuple(x * y for x, y in zip(r1, r2)) for r1, r2 in zip(a, b)),
        cols=a.cols,
    )


def det(a: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Denominators are cleared row by row (the scaling is tracked exactly)
    so the elimination runs on integers, which keeps intermediate entries
    at the size of minors instead of blowing up denominators. The 0x0
    determinant is 1 by the empty-product convention.
    """
    if not a.is_square:
        raise ShapeError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    m: list[list[int]] = []
    for row in a:
        l = math.lcm(*(x.denominator for x in row))
        scale *= l
        m.append([int(x * l) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        mk = m[k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            for j in range(k + 1, n):
                # exact division: Bareiss guarantees prev divides this
                mi[j] = (pivot * mi[j] - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return Fraction(sign * m[-1][-1], scale)


def inverse(a: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination with nonzero-pivot selection.

    Raises :class:`SingularMatrixError` carrying the rank when no inverse
    exists; otherwise ``a @ inverse(a) == identity`` holds exactly.
    """
    if not a.is_square:
        raise ShapeError(f"inverse needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    zero, one = Fraction(0), Fraction(1)
    aug = [list(a.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if aug[r][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        p = aug[rank][col]
        if p != 1:
            aug[rank] = [x / p for x in aug[rank]]
        prow = aug[rank]
        for r in range(n):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
        rank += 1
    if rank < n:
        raise SingularMatrixError(rank, n)
    return RationalMatrix((row[n:] for row in aug), cols=n)


def cofactor_sum(a: RationalMatrix) -> Fraction:
    """Sum of all n^2 cofactors of a square matrix, n >= 1.

    Computed as det(A + J) - det(A) with J the all-ones matrix: det(A + tJ)
    is affine in t because J has rank one, and its slope is the cofactor
    sum. Two eliminations instead of n^2 minor determinants.
    """
    if not a.is_square:
        raise ShapeError(f"cofactor sum needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows == 0:
        raise ShapeError("cofactor sum needs at least a 1x1 matrix")
    return det(a + RationalMatrix.ones(a.rows, a.cols)) - det(a)
