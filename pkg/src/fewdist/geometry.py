"""Rational point sets, their squared-distance spectra, and the BBS bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from fewdist.errors import DimensionMismatchError, DuplicatePointsError, InvalidPointSetError
from fewdist.linalg import as_fraction

Point = tuple[Fraction, ...]


def squared_distance(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatchError(f"points of dimension {len(a)} and {len(b)}")
    total = Fraction(0)
    for x, y in zip(a, b):
        t = as_fraction(x) - as_fraction(y)
        total += t * t
    return total


@dataclass(frozen=True)
class PointSet:
    """A nonempty ordered list of pairwise distinct points in Q^d."""

    dimension: int
    points: tuple[Point, ...]

    def __init__(self, dimension: int, points: Iterable[Sequence]):
        if dimension < 1:
            raise InvalidPointSetError(f"dimension must be at least 1, got {dimension}")
        pts = []
        for p in points:
            if len(p) != dimension:
                raise DimensionMismatchError(
                    f"point {tuple(p)!r} has {len(p)} coordinates, expected {dimension}"
                )
            pts.append(tuple(as_fraction(x) for x in p))
        if not pts:
            raise InvalidPointSetError("point set is empty")
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DuplicatePointsError(
                    f"points {seen[p]} and {i} coincide at {_fmt_point(p)}"
                )
            seen[p] = i
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self.dimension, [self.points[i] for i in indices])


def _fmt_point(p: Point) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


@dataclass(frozen=True)
class DistanceSpectrum:
    """Strictly increasing tuple of positive squared distances."""

    squared_values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.squared_values)
        if any(v <= 0 for v in vals):
            raise ValueError("spectrum entries must be positive")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError("spectrum entries must be strictly increasing")
        object.__setattr__(self, "squared_values", vals)

    @classmethod
    def from_values(cls, values: Iterable) -> "DistanceSpectrum":
        return cls(tuple(sorted({as_fraction(v) for v in values})))

    @property
    def s(self) -> int:
        return len(self.squared_values)

    def __len__(self) -> int:
        return len(self.squared_values)

    def __iter__(self):
        return iter(self.squared_values)

    def __contains__(self, q) -> bool:
        return as_fraction(q) in self.squared_values


def distance_spectrum(points: PointSet) -> DistanceSpectrum:
    """Distinct squared distances over all unordered pairs; empty for one point."""
    values = set()
    for (i, a), (j, b) in combinations(enumerate(points.points), 2):
        q = squared_distance(a, b)
        if q == 0:
            raise DuplicatePointsError(f"points {i} and {j} coincide")
        values.add(q)
    return DistanceSpectrum(tuple(sorted(values)))


def bbs_bound(d: int, s: int) -> int:
    """Maximum size ``C(d+s, s)`` of an s-distance set in R^d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    return comb(d + s, s)
