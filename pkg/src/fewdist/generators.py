"""Classical few-distance configurations with rational coordinates."""

from __future__ import annotations

from itertools import combinations, product

from fewdist.geometry import PointSet


def _unit(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == i else 0 for k in range(n))


def simplex_standard(n: int) -> PointSet:
    """Standard basis ``e_1..e_n`` of Q^n: a 1-distance set (squared distance 2)."""
    if n < 2:
        raise ValueError("simplex_standard needs n >= 2")
    return PointSet(n, [_unit(n, i) for i in range(n)])


def cross_polytope(d: int) -> PointSet:
    """``+-e_1..+-e_d``: 2d points with squared distances {2, 4}."""
    if d < 2:
        raise ValueError("cross_polytope needs d >= 2")
    return PointSet(d, [_unit(d, i, sign) for i in range(d) for sign in (1, -1)])


def johnson(n: int, k: int) -> PointSet:
    """Indicator vectors of the k-subsets of {1..n}.

    Two k-subsets sharing ``k - j`` elements are at squared distance ``2j``,
    so this is an s-distance set with ``s = min(k, n - k)``.
    """
    if not n > k >= 1:
        raise ValueError("johnson needs n > k >= 1")
    return PointSet(
        n, [tuple(1 if i in c else 0 for i in range(n)) for c in combinations(range(n), k)]
    )


def hypercube(d: int) -> PointSet:
    """``{0, 1}^d``, squared distances ``1..d``."""
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    return PointSet(d, list(product((0, 1), repeat=d)))


FAMILIES = {
    "simplex": (simplex_standard, ("n",)),
    "crosspolytope": (cross_polytope, ("d",)),
    "johnson": (johnson, ("n", "k")),
    "hypercube": (hypercube, ("d",)),
}
