"""Brute-force orbit products: expand, add pairwise, bucket by dominant representative.

This is intentionally the dumbest correct route and shares nothing with the
closed-form engine except the reflection code in :mod:`orbits.groups`.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .decomposition import Decomposition, Term
from .errors import InconsistencyError
from .groups import GroupId, Point, orbit_points, orbit_size, to_dominant


def product_points(g: GroupId | str, lam: Point, mu: Point) -> Counter:
    """Multiset ``{p + q : p in O(lam), q in O(mu)}`` as a point -> count mapping."""
    g = GroupId.coerce(g)
    counts: Counter = Counter()
    for p in orbit_points(g, lam):
        for q in orbit_points(g, mu):
            counts[p + q] += 1
    return counts


def decompose_oracle(g: GroupId | str, lam: Point, mu: Point) -> Decomposition:
    g = GroupId.coerce(g)
    buckets: Counter = Counter()
    for p, n in product_points(g, lam, mu).items():
        buckets[to_dominant(g, p)[0]] += n
    terms = []
    for d, n in buckets.items():
        size = orbit_size(g, d)
        if n % size:
            raise InconsistencyError(
                f"bucket {d!r} holds {n} points, not a multiple of orbit size {size}")
        terms.append(Term(d, Fraction(n // size)))
    return Decomposition.merge(g, terms, lam, mu)
