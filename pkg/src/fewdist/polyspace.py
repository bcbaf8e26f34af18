"""Low-degree polynomials restricted to a point set.

``dim_s(A)`` is the dimension of the space of polynomials of degree at most
``s`` viewed as functions on ``A``; it is the rank of the monomial
evaluation matrix.  The orthogonal space (functions on ``A`` summing to
zero against every such polynomial) is the left nullspace of that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from fewdist.geometry import PointSet
from fewdist.linalg import Matrix, nullspace, rank


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != len(self.exponents):
            raise ValueError("point dimension does not match monomial")
        v = Fraction(1)
        for x, e in zip(point, self.exponents):
            if e:
                v *= Fraction(x) ** e
        return v

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def _compositions(n: int, k: int):
    """Exponent vectors of length ``n`` summing to ``k``, lex-descending."""
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(n - 1, k - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _monomials(num_vars: int, s: int) -> tuple[Monomial, ...]:
    return tuple(
        Monomial(e) for k in range(s + 1) for e in _compositions(num_vars, k)
    )


def monomials_up_to_degree(num_vars: int, s: int) -> list[Monomial]:
    """All monomials of total degree <= s in graded-lex order.

    Degree ascending; within a degree, exponent vectors in descending lex
    order, so for two variables the list begins ``1, x1, x2, x1^2, ...``.
    """
    if num_vars < 1:
        raise ValueError("num_vars must be at least 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    return list(_monomials(num_vars, s))


def evaluation_matrix(points: PointSet, s: int) -> Matrix:
    """``|A| x C(d+s, s)`` matrix with entry ``(a, alpha) = a^alpha``."""
    monos = monomials_up_to_degree(points.dimension, s)
    rows = [[m(p) for m in monos] for p in points]
    return Matrix.from_rows(rows, cols=len(monos))


def dim_s(points: PointSet, s: int) -> int:
    return rank(evaluation_matrix(points, s))


@dataclass(frozen=True)
class OmegaBasis:
    """Basis of functions on ``A`` orthogonal to all polynomials of degree <= s.

    Vectors are indexed by the point order of ``A`` and are primitive
    integer vectors.
    """

    vectors: tuple[tuple[int, ...], ...]
    set_size: int
    s: int

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def omega_basis(points: PointSet, s: int) -> OmegaBasis:
    ev = evaluation_matrix(points, s)
    return OmegaBasis(tuple(nullspace(ev.transpose())), len(points), s)
