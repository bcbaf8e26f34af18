"""Largest subset of a finite ground set spanning at most ``s`` distances.

The BBS bound ``C(d+s, s)`` caps the answer, so the backtracking search
stops as soon as it finds a subset of that size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from fewdist.errors import SetTooLargeError
from fewdist.geometry import PointSet, bbs_bound, distance_spectrum, squared_distance

ORACLE_MAX_SIZE = 16


@dataclass(frozen=True)
class SearchResult:
    best_subset: PointSet
    best_indices: tuple[int, ...]
    best_size: int
    nodes_explored: int
    pruned_by_bound: int
    exhaustive: bool
    reached_bbs_bound: bool = False


class _BudgetExhausted(Exception):
    pass


class _BoundReached(Exception):
    pass


def _distance_table(ground: PointSet) -> list[list]:
    pts = ground.points
    return [[squared_distance(a, b) for b in pts] for a in pts]


def max_s_distance_subset(ground: PointSet, s: int, budget: Optional[int] = None) -> SearchResult:
    """Backtracking search for a maximum subset with at most ``s`` distances.

    Subsets are grown in increasing index order; candidates that would push
    the distance count past ``s`` are filtered out before descending.  A
    branch is cut when it cannot beat the best size so far, and the whole
    search ends once the best size reaches ``C(d+s, s)``.  ``budget`` caps
    the number of nonempty subsets visited; when it runs out the best so far
    is returned with ``exhaustive=False``.

    Among maximum subsets, the one with the lexicographically smallest index
    sequence is returned.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if budget is not None and budget < 1:
        raise ValueError("budget must be positive")
    n = len(ground)
    dist = _distance_table(ground)
    cap = bbs_bound(ground.dimension, s)

    best: tuple[int, ...] = ()
    nodes = 0
    pruned = 0

    def visit(chosen: list[int], dists: frozenset, cands: list[int]) -> None:
        nonlocal best, nodes, pruned
        for idx, c in enumerate(cands):
            if len(chosen) + len(cands) - idx <= len(best):
                pruned += 1
                return
            if budget is not None and nodes >= budget:
                raise _BudgetExhausted
            nodes += 1
            new_dists = dists.union(dist[c][x] for x in chosen)
            new_chosen = chosen + [c]
            if len(new_chosen) > len(best):
                best = tuple(new_chosen)
                if len(best) >= cap:
                    raise _BoundReached
            row = dist[c]
            nxt = []
            for c2 in cands[idx + 1:]:
                extra = {dist[c2][x] for x in chosen}
                extra.add(row[c2])
                if len(new_dists.union(extra)) <= s:
                    nxt.append(c2)
            visit(new_chosen, new_dists, nxt)

    exhaustive = True
    reached = False
    try:
        visit([], frozenset(), list(range(n)))
    except _BudgetExhausted:
        exhaustive = False
    except _BoundReached:
        reached = True
        pruned += 1

    subset = ground.subset(best)
    assert len(distance_spectrum(subset)) <= s
    assert len(best) <= cap, "subset larger than the BBS bound"
    return SearchResult(
        best_subset=subset,
        best_indices=best,
        best_size=len(best),
        nodes_explored=nodes,
        pruned_by_bound=pruned,
        exhaustive=exhaustive,
        reached_bbs_bound=reached,
    )


def exhaustive_oracle(ground: PointSet, s: int) -> int:
    """Maximum size of a subset with at most ``s`` distances, by trying every subset."""
    n = len(ground)
    if n > ORACLE_MAX_SIZE:
        raise SetTooLargeError(f"exhaustive oracle limited to {ORACLE_MAX_SIZE} points, got {n}")
    dist = _distance_table(ground)
    best = 0
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if len(members) <= best:
            continue
        values = set()
        for i, j in combinations(members, 2):
            values.add(dist[i][j])
            if len(values) > s:
                break
        else:
            best = len(members)
    return best
