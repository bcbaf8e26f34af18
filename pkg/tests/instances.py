"""Random instance generators shared by the property suites."""

import random

from fewdist.clp import SparsePairPoly
from fewdist.geometry import PointSet
from fewdist.polyspace import monomials_up_to_degree


def random_pointset(rng, max_dim=3, max_size=8, lo=-3, hi=3, min_size=1):
    d = rng.randint(1, max_dim)
    n = rng.randint(min_size, max_size)
    pts = set()
    # a line in Q^1 holds at most hi - lo + 1 distinct integer points
    n = min(n, (hi - lo + 1) ** d)
    while len(pts) < n:
        pts.add(tuple(rng.randint(lo, hi) for _ in range(d)))
    pts = sorted(pts)
    rng.shuffle(pts)
    return PointSet(d, pts)


def random_pair_poly(rng, num_vars, max_degree, max_terms=8, lo=-5, hi=5, symmetric=True):
    """Random sparse p(x, y) with total degree <= max_degree.

    Symmetric polynomials are built from mirrored pairs, so ``max_terms``
    bounds the final term count either way.
    """
    monos = monomials_up_to_degree(num_vars, max_degree)
    pairs = [
        (a.exponents, b.exponents)
        for a in monos
        for b in monos
        if a.total_degree + b.total_degree <= max_degree
    ]
    terms = []
    budget = max_terms
    while budget > 0:
        a, b = rng.choice(pairs)
        c = rng.randint(lo, hi)
        if symmetric and a != b:
            if budget < 2:
                break
            terms += [(a, b, c), (b, a, c)]
            budget -= 2
        else:
            terms.append((a, b, c))
            budget -= 1
        if rng.random() < 0.25:
            break
    return SparsePairPoly(num_vars, terms, declared_degree_bound=max_degree)


def theorem_two_instances(count, seed=20261014, symmetric=True):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = random_pointset(rng)
        s = rng.randint(0, 2)
        p = random_pair_poly(rng, a.dimension, 2 * s + 1, symmetric=symmetric)
        out.append((a, s, p))
    return out

