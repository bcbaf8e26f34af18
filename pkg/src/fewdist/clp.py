"""Pair polynomials, the matrix ``M[a, b] = p(a, b)`` on a point set, and the
rank and inertia bounds it satisfies.

For ``p(x, y)`` of degree at most ``2s + 1`` and any finite ``A``:

* ``rank M <= 2 dim_s(A)``
* ``max(r+, r-) <= dim_s(A)`` for the quadratic form ``f -> f^T M f``

The distance-product polynomial ``prod_q (q - |x - y|^2)`` over the squared
distances ``q`` of an s-distance set makes ``M`` a positive multiple of the
identity, giving ``|A| = r+ <= dim_s(A) <= C(d+s, s)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence, Union

from fewdist.errors import (
    DegreeTooHighError,
    DimensionMismatchError,
    NonSymmetricError,
    SetTooLargeError,
)
from fewdist.geometry import (
    DistanceSpectrum,
    PointSet,
    bbs_bound,
    distance_spectrum,
    squared_distance,
)
from fewdist.linalg import Inertia, Matrix, as_fraction, determinant, inertia, rank
from fewdist.polyspace import dim_s, omega_basis

Term = tuple[tuple[int, ...], tuple[int, ...], Fraction]

MINOR_CHECK_MAX_SIZE = 7


def _mono_value(point: Sequence[Fraction], exps: tuple[int, ...]) -> Fraction:
    v = Fraction(1)
    for x, e in zip(point, exps):
        if e:
            v *= x ** e
    return v


@dataclass(frozen=True)
class SparsePairPoly:
    """``p(x, y) = sum coeff * x^alpha * y^beta`` in ``2 * num_vars`` variables.

    Like terms are merged and zero terms dropped on construction.  The
    declared degree bound defaults to the exact total degree and may be set
    higher, never lower.
    """

    num_vars: int
    terms: tuple[Term, ...]
    declared_degree_bound: int

    def __init__(self, num_vars: int, terms: Iterable, declared_degree_bound: int | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be at least 1")
        acc: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        for alpha, beta, coeff in terms:
            alpha = tuple(int(e) for e in getattr(alpha, "exponents", alpha))
            beta = tuple(int(e) for e in getattr(beta, "exponents", beta))
            if len(alpha) != num_vars or len(beta) != num_vars:
                raise DimensionMismatchError(
                    f"term exponents {alpha}, {beta} do not have {num_vars} entries"
                )
            if any(e < 0 for e in alpha + beta):
                raise ValueError("negative exponent")
            key = (alpha, beta)
            acc[key] = acc.get(key, Fraction(0)) + as_fraction(coeff)
        merged = tuple(sorted((a, b, c) for (a, b), c in acc.items() if c))
        degree = max((sum(a) + sum(b) for a, b, _ in merged), default=0)
        if declared_degree_bound is None:
            declared_degree_bound = degree
        elif declared_degree_bound < degree:
            raise ValueError(
                f"declared degree bound {declared_degree_bound} is below the actual degree {degree}"
            )
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", merged)
        object.__setattr__(self, "declared_degree_bound", declared_degree_bound)

    @property
    def degree(self) -> int:
        """Exact total degree (0 for the zero polynomial)."""
        return max((sum(a) + sum(b) for a, b, _ in self.terms), default=0)

    def is_symmetric(self) -> bool:
        """Whether ``p(x, y) == p(y, x)`` as polynomials."""
        coeffs = {(a, b): c for a, b, c in self.terms}
        return all(coeffs.get((b, a)) == c for (a, b), c in coeffs.items())

    def evaluate(self, a: Sequence, b: Sequence) -> Fraction:
        if len(a) != self.num_vars or len(b) != self.num_vars:
            raise DimensionMismatchError(
                f"polynomial in {self.num_vars}+{self.num_vars} variables evaluated at "
                f"points of dimension {len(a)} and {len(b)}"
            )
        a = [as_fraction(x) for x in a]
        b = [as_fraction(x) for x in b]
        return sum(
            (c * _mono_value(a, alpha) * _mono_value(b, beta) for alpha, beta, c in self.terms),
            Fraction(0),
        )


@dataclass(frozen=True)
class DistanceProductPoly:
    """``p(x, y) = prod_{q in spectrum} (q - |x - y|^2)`` for squared distances ``q``."""

    spectrum: DistanceSpectrum

    @property
    def declared_degree_bound(self) -> int:
        return 2 * len(self.spectrum)

    @property
    def num_vars(self) -> None:
        return None

    def is_symmetric(self) -> bool:
        return True

    def evaluate(self, a: Sequence, b: Sequence) -> Fraction:
        r = squared_distance(a, b)
        v = Fraction(1)
        for q in self.spectrum:
            v *= q - r
        return v

    def to_sparse(self, num_vars: int) -> SparsePairPoly:
        """Expand into monomials in ``x_1..x_d, y_1..y_d``."""
        # |x - y|^2 = sum_i x_i^2 - 2 x_i y_i + y_i^2
        zero = (0,) * num_vars

        def unit(i, e):
            return tuple(e if k == i else 0 for k in range(num_vars))

        dist: dict = {}
        for i in range(num_vars):
            for key, c in (
                ((unit(i, 2), zero), 1),
                ((unit(i, 1), unit(i, 1)), -2),
                ((zero, unit(i, 2)), 1),
            ):
                dist[key] = dist.get(key, 0) + c

        prod: dict = {(zero, zero): Fraction(1)}
        for q in self.spectrum:
            factor = {k: -Fraction(c) for k, c in dist.items()}
            factor[(zero, zero)] = factor.get((zero, zero), Fraction(0)) + q
            nxt: dict = {}
            for (a1, b1), c1 in prod.items():
                for (a2, b2), c2 in factor.items():
                    key = (
                        tuple(u + v for u, v in zip(a1, a2)),
                        tuple(u + v for u, v in zip(b1, b2)),
                    )
                    nxt[key] = nxt.get(key, Fraction(0)) + c1 * c2
            prod = nxt
        return SparsePairPoly(
            num_vars,
            [(a, b, c) for (a, b), c in prod.items()],
            declared_degree_bound=self.declared_degree_bound,
        )


PairPoly = Union[SparsePairPoly, DistanceProductPoly]


def distance_product_poly(spectrum: DistanceSpectrum) -> DistanceProductPoly:
    return DistanceProductPoly(spectrum)


def eval_pair(p: PairPoly, a: Sequence, b: Sequence) -> Fraction:
    return p.evaluate(a, b)


def build_clp_matrix(p: PairPoly, points: PointSet) -> Matrix:
    """``|A| x |A|`` matrix of ``p(a_i, a_j)`` in the point order of ``A``."""
    if p.num_vars is not None and p.num_vars != points.dimension:
        raise DimensionMismatchError(
            f"polynomial has {p.num_vars} variables per argument, points have dimension "
            f"{points.dimension}"
        )
    pts = points.points
    return Matrix(len(pts), len(pts), tuple(p.evaluate(a, b) for a in pts for b in pts))


def _require_degree(p: PairPoly, s: int) -> None:
    if p.declared_degree_bound > 2 * s + 1:
        raise DegreeTooHighError(
            f"degree bound {p.declared_degree_bound} exceeds 2*s+1 = {2 * s + 1}"
        )


class RankBound(NamedTuple):
    clp_rank: int
    bound: int
    passed: bool


class InertiaBound(NamedTuple):
    inertia: Inertia
    bound: int
    passed: bool
    symmetrized: bool


def key_observation_check(p: PairPoly, points: PointSet, s: int) -> bool:
    """True iff ``f^T M g == 0`` for every pair of vectors in the orthogonal basis.

    Always true for valid input; a False return means a bug somewhere in
    the pipeline.
    """
    _require_degree(p, s)
    basis = omega_basis(points, s)
    if not len(basis):
        return True
    m = build_clp_matrix(p, points)
    f = Matrix.from_rows(basis.vectors, cols=len(points))
    gram = f @ m @ f.transpose()
    return all(x == 0 for x in gram.entries)


def check_rank_bound(
    p: PairPoly, points: PointSet, s: int, *, enforce_degree: bool = True
) -> RankBound:
    """``rank M <= 2 dim_s(A)``.

    ``enforce_degree=False`` skips the degree precondition so that
    counterexamples with degree ``2s + 2`` can be exhibited.
    """
    if enforce_degree:
        _require_degree(p, s)
    r = rank(build_clp_matrix(p, points))
    bound = 2 * dim_s(points, s)
    return RankBound(r, bound, r <= bound)


def check_inertia_bound(
    p: PairPoly, points: PointSet, s: int, *, symmetrize: bool = True
) -> InertiaBound:
    """``max(r+, r-) <= dim_s(A)`` for the quadratic form of ``M``.

    A non-symmetric ``M`` is replaced by ``(M + M^T) / 2``, which defines the
    same quadratic form; with ``symmetrize=False`` it is rejected instead.
    """
    _require_degree(p, s)
    m = build_clp_matrix(p, points)
    symmetrized = False
    if not m.is_symmetric():
        if not symmetrize:
            raise NonSymmetricError("M is not symmetric; pass symmetrize=True")
        m = m.symmetric_part()
        symmetrized = True
    inr = inertia(m)
    bound = dim_s(points, s)
    return InertiaBound(inr, bound, max(inr.positive, inr.negative) <= bound, symmetrized)


def minor_vanishing_check(p: PairPoly, points: PointSet, s: int) -> bool:
    """True iff every square minor of ``M`` of order ``>= 2 dim_s(A) + 1`` is zero.

    Exhaustive, so limited to at most seven points.
    """
    n = len(points)
    if n > MINOR_CHECK_MAX_SIZE:
        raise SetTooLargeError(f"minor enumeration limited to {MINOR_CHECK_MAX_SIZE} points, got {n}")
    _require_degree(p, s)
    m = build_clp_matrix(p, points)
    lo = 2 * dim_s(points, s) + 1
    for k in range(lo, n + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                if determinant(m.submatrix(rows, cols)) != 0:
                    return False
    return True


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    relation: str
    rhs: int
    passed: bool

    @classmethod
    def compare(cls, name: str, lhs: int, relation: str, rhs: int) -> "Check":
        if relation == "<=":
            ok = lhs <= rhs
        elif relation == "=":
            ok = lhs == rhs
        else:
            raise ValueError(f"unknown relation {relation!r}")
        return cls(name, lhs, relation, rhs, ok)


@dataclass(frozen=True)
class Certificate:
    """Audit record of one run of the BBS argument on a concrete point set."""

    set_size: int
    dimension: int
    s: int
    spectrum: DistanceSpectrum
    clp_rank: int
    clp_inertia: Inertia
    dim_s_value: int
    bbs_value: int
    checks: tuple[Check, ...]
    symmetrized: bool = False
    scalar_matrix: bool = False
    scalar: Fraction = field(default=Fraction(0))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def certify_bbs(points: PointSet) -> Certificate:
    """Run the distance-product argument on ``points`` and record every step."""
    spectrum = distance_spectrum(points)
    s = len(spectrum)
    p = distance_product_poly(spectrum)
    _require_degree(p, s)
    m = build_clp_matrix(p, points)
    r = rank(m)
    symmetrized = not m.is_symmetric()
    inr = inertia(m.symmetric_part() if symmetrized else m)
    dim = dim_s(points, s)
    bound = bbs_bound(points.dimension, s)
    n = len(points)

    expected_scalar = Fraction(1)
    for q in spectrum:
        expected_scalar *= q
    scalar_matrix = m == Matrix.identity(n, expected_scalar)

    checks = (
        Check.compare("rank_bound", r, "<=", 2 * dim),
        Check.compare("positive_index_bound", inr.positive, "<=", dim),
        Check.compare("negative_index_bound", inr.negative, "<=", dim),
        Check.compare("size_equals_positive_index", n, "=", inr.positive),
        Check.compare("size_bbs_bound", n, "<=", bound),
    )
    return Certificate(
        set_size=n,
        dimension=points.dimension,
        s=s,
        spectrum=spectrum,
        clp_rank=r,
        clp_inertia=inr,
        dim_s_value=dim,
        bbs_value=bound,
        checks=checks,
        symmetrized=symmetrized,
        scalar_matrix=scalar_matrix,
        scalar=expected_scalar,
    )
