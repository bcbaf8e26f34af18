"""Dense linear algebra over the rationals.

Everything here is exact: entries are :class:`fractions.Fraction` and no
floating point value is ever produced.  Rank and determinants use
fraction-free (Bareiss) elimination on an integer copy of the matrix;
inertia uses symmetric pivoting with 1x1 and 2x2 blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from fewdist.errors import NonSquareError, NonSymmetricError


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        entries = tuple(as_fraction(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int, scale=1) -> "Matrix":
        c = as_fraction(scale)
        zero = Fraction(0)
        return cls(n, n, tuple(c if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Iterable) -> "Matrix":
        values = [as_fraction(v) for v in values]
        n = len(values)
        zero = Fraction(0)
        return cls(n, n, tuple(values[i] if i == j else zero for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        b_cols = [other.entries[j::other.cols] for j in range(other.cols)] if other.cols else []
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in b_cols:
                out.append(sum((x * y for x, y in zip(r, c)), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(
            len(row_idx),
            len(col_idx),
            tuple(self.entries[i * self.cols + j] for i in row_idx for j in col_idx),
        )

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((x * y for x, y in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]

    def bilinear(self, f: Sequence, g: Sequence) -> Fraction:
        """Return ``f^T M g``."""
        if len(f) != self.rows:
            raise ValueError("vector length mismatch")
        mg = self.matvec(g)
        return sum((as_fraction(a) * b for a, b in zip(f, mg)), Fraction(0))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.cols
        e = self.entries
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def symmetric_part(self) -> "Matrix":
        return (self + self.transpose()).scale(Fraction(1, 2))

    def is_scalar(self) -> bool:
        """True when the matrix is square and equals ``c * I`` for some ``c``."""
        if not self.is_square():
            return False
        if self.rows == 0:
            return True
        c = self.entries[0]
        n = self.cols
        return all(
            x == (c if i == j else 0)
            for i in range(n)
            for j, x in enumerate(self.row(i))
        )


class Inertia(NamedTuple):
    positive: int
    negative: int
    zero: int


def _integer_rows(m: Matrix) -> list[list[int]]:
    # Scaling a row by a nonzero integer preserves rank and only rescales
    # the determinant, which callers undo.
    out = []
    for i in range(m.rows):
        r = m.row(i)
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss(a: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination in place.

    Returns ``(rank, last_pivot, sign)``.  The pivot is the first nonzero
    entry of the trailing block in row-major order, moved into place by a
    row swap and a column swap; ``sign`` tracks the permutation parity so
    that ``sign * last_pivot`` is the determinant of a full-rank square
    input.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    k = 0
    while k < min(n_rows, n_cols):
        piv = None
        for i in range(k, n_rows):
            row = a[i]
            for j in range(k, n_cols):
                if row[j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n_rows):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n_cols):
                ri[j] = (p * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = p
        k += 1
    return k, prev, sign


def rank(m: Matrix) -> int:
    """Exact rank over Q."""
    if m.rows == 0 or m.cols == 0:
        return 0
    r, _, _ = _bareiss(_integer_rows(m))
    return r


def determinant(m: Matrix) -> Fraction:
    if not m.is_square():
        raise NonSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    for i in range(n):
        r = m.row(i)
        scale *= lcm(*(x.denominator for x in r))
    r, piv, sign = _bareiss(_integer_rows(m))
    if r < n:
        return Fraction(0)
    return Fraction(sign * piv, scale)


def _primitive(v: list[Fraction]) -> tuple[int, ...]:
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan over Q)."""
    a = m.tolist()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        i = next((i for i in range(r, m.rows) if a[i][c]), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for k in range(m.rows):
            if k != r and a[k][c]:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of ``{v : m v = 0}`` as primitive integer vectors.

    Each vector has content 1 and a positive first nonzero entry.  One
    vector is returned per free column of the reduced echelon form, in
    column order.
    """
    a, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][free]
        basis.append(_primitive(v))
    return basis


def inertia(m: Matrix) -> Inertia:
    """Sylvester inertia ``(r+, r-, r0)`` of a symmetric rational matrix.

    Repeatedly takes the first nonzero diagonal entry as a 1x1 pivot.  When
    the remaining diagonal is entirely zero but some off-diagonal entry
    ``a_ij`` is not, the block ``[[0, a_ij], [a_ij, 0]]`` is taken as a 2x2
    pivot; it has one positive and one negative eigenvalue.  Each pivot is
    eliminated by a symmetric Schur complement, i.e. a congruence.
    """
    if not m.is_square():
        raise NonSquareError(f"inertia of a {m.rows}x{m.cols} matrix")
    if not m.is_symmetric():
        raise NonSymmetricError("inertia requires a symmetric matrix")

    a = m.tolist()
    pos = neg = 0
    while a:
        n = len(a)
        d = next((i for i in range(n) if a[i][i]), None)
        if d is not None:
            p = a[d][d]
            if p > 0:
                pos += 1
            else:
                neg += 1
            col = [a[i][d] for i in range(n)]
            keep = [i for i in range(n) if i != d]
            a = [[a[i][j] - col[i] * col[j] / p for j in keep] for i in keep]
            continue
        off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
        if off is None:
            break
        i0, j0 = off
        q = a[i0][j0]
        pos += 1
        neg += 1
        ci = [a[k][i0] for k in range(n)]
        cj = [a[k][j0] for k in range(n)]
        keep = [k for k in range(n) if k not in (i0, j0)]
        # Schur complement with the inverse block [[0, 1/q], [1/q, 0]].
        a = [[a[k][l] - (ci[k] * cj[l] + cj[k] * ci[l]) / q for l in keep] for k in keep]
    return Inertia(pos, neg, m.rows - pos - neg)
