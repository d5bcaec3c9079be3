"""Closed-form product decompositions for A2, C2, G2 and H2.

Each ``_terms_<group>`` function receives the pairings ``p = (<lam|a1>, <lam|a2>)`` and
``q = (<mu|a1>, <mu|a2>)`` and returns the |G| candidate dominants, one per term of the
closed formula, in the formula's own order.  Multiplicities follow from orbit sizes
alone: ``k_i = |O(lam)| |O(mu)| / (|G| |O(d_i)|)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .decomposition import Decomposition, Term
from .errors import DomainError, InconsistencyError
from .groups import (
    GroupId, Point, congruence, congruence_modulus, group_data, is_dominant,
    is_lattice_point, orbit_size, pairings, to_dominant,
)
from .scalar import TAU, Scalar, smax, smin

__all__ = ["raw_terms", "raw_dominants", "decompose_formula", "check_congruence"]

_HALF = Fraction(1, 2)


def _sgn(x: Scalar) -> Scalar:
    return Scalar(x.sign())


def _terms_a2(p, q):
    p1, p2 = p
    q1, q2 = q
    d1, d2 = p1 - q1, p2 - q2
    return [
        (p1 + q1, p2 + q2),
        (abs(d1), _HALF * (p1 + q1) + (p2 + q2) - _HALF * abs(d1)),
        ((p1 + q1) + _HALF * (p2 + q2) - _HALF * abs(d2), abs(d2)),
        (abs(q1 + _HALF * q2 + _HALF * (p2 - p1) - _HALF * abs(d2 + p1)),
         abs(_HALF * p1 + p2 + _HALF * (q1 - q2) - _HALF * abs(-d1 + q2))),
        (abs(p1 + _HALF * p2 + _HALF * (q2 - q1) - _HALF * abs(-d2 + q1)),
         abs(_HALF * q1 + q2 + _HALF * (p1 - p2) - _HALF * abs(d1 + p2))),
        (abs(abs(d1 + d2) - abs(smin(p1 - q2, q1 - p2, 0))),
         abs(abs(d1 + d2) - abs(smin(-p1 + q2, -q1 + p2, 0)))),
    ]


def _terms_c2(p, q):
    p1, p2 = p
    q1, q2 = q
    d1, d2 = p1 - q1, p2 - q2
    return [
        (2 * (p1 + q1), p2 + q2),
        (abs(2 * d1), (p1 + q1) + (p2 + q2) - abs(d1)),
        (2 * (p1 + q1) + (p2 + q2) - abs(d2), abs(d2)),
        (abs((p2 + q2) + 2 * p1 - abs(2 * q1 - d2)),
         abs((p1 + q1) + q2 - abs(-d1 - p2))),
        (smin(2 * (p1 + p2) + 2 * q1, abs(2 * p1 - 2 * (q1 + q2))),
         abs((p1 + q1) + p2 - abs(d1 - q2))),
        (2 * smin(abs(d1), abs(d1 + d2)),
         smin(abs(d2), abs(2 * d1 + d2))),
        (2 * smin(p1 + q1, abs(d1 + d2)),
         abs((p1 + q1) - abs(-d1 - d2))),
        (abs((p2 + q2) - abs(-2 * d1 - d2)),
         smin(p2 + q2, abs(2 * d1 + d2))),
    ]


def _terms_g2(p, q):
    p1, p2 = p
    q1, q2 = q
    d1, d2 = p1 - q1, p2 - q2
    return [
        (p1 + q1, 3 * (p2 + q2)),
        (abs(d1), Fraction(3, 2) * ((p1 + q1) + 2 * (p2 + q2) - abs(d1))),
        ((p1 + q1) + Fraction(3, 2) * (p2 + q2) - Fraction(3, 2) * abs(d2), 3 * abs(d2)),
        (smin(2 * p1 + 3 * p2 + q1, abs(d1 - 3 * q2)),
         3 * smin(p2 + q1 + 2 * q2, abs(p1 + p2 - q2))),
        (smin(p1 + 2 * q1 + 3 * q2, abs(d1 + 3 * p2)),
         3 * smin(p1 + 2 * p2 + q2, abs(p2 - (q1 + q2)))),
        (smin(abs(2 * p1 + 3 * p2 - q1), abs(p1 - (2 * q1 + 3 * q2))),
         3 * smin(p1 + 2 * p2 + q2, p2 + q1 + 2 * q2, abs(d1 + d2))),
        (smin(abs(d1), abs(d1 + 3 * d2), abs(2 * d1 + 3 * d2)),
         3 * smin(abs(d2), abs(d1 + d2), abs(d1 + 2 * d2))),
        (smin(p1 + q1, abs(d1 + 3 * d2 + p1), abs(d1 + 3 * d2 - q1)),
         3 * smin(abs(p1 + p2 - q2), abs(d1 + 2 * d2), abs(p2 - (q1 + q2)))),
        (smin(abs(d1 + 3 * p2), abs(2 * d1 + 3 * d2), abs(d1 - 3 * q2)),
         3 * smin(p2 + q2, abs(d1 + d2 + p2), abs(d1 + d2 - q2))),
        (smin(p1 + q1 + 3 * q2, abs(2 * p1 + 3 * p2 - q1), abs(d1 + 3 * d2 - q1)),
         3 * smin(p1 + p2 + q2, abs(d1 + 2 * d2 + q2), abs(p2 - (q1 + 2 * q2)))),
        (smin(p1 + 3 * p2 + q1, abs(2 * d1 + 3 * d2 + q1), abs(p1 - (2 * q1 + 3 * q2))),
         3 * smin(p2 + q1 + q2, abs(d1 + 2 * d2 - p2), abs(p1 + 2 * p2 - q2))),
        (smin(2 * p1 + 3 * p2 + q1, abs(d1 + 3 * d2), p1 + 2 * q1 + 3 * q2),
         # two arguments only, unlike its siblings; the oracle sweeps confirm it
         3 * smin(abs(p1 + 2 * p2 - q2), abs(d2 - (q1 + q2)))),
    ]


def _h2_a(p1, p2, q1, q2):
    t = TAU
    u, v = p2 - q1, q2 - p1
    first = abs(t * smax(u, v) * (1 - _sgn(smax(0, u, v))))
    return abs(first + smin(u, v, t * abs((p1 - q1) + (p2 - q2))))


def _h2_b(p1, p2, q1, q2):
    t = TAU
    u, v = p2 - q1, q2 - p1
    s = t * ((p1 - q1) + (p2 - q2))
    x = (t * p1 + p2) - (q1 + t * q2)          # <lam|t a1 + a2> - <mu|a1 + t a2>
    y = (t * q1 + q2) - (p1 + t * p2)          # <mu|t a1 + a2> - <lam|a1 + t a2>
    term1 = ((t * p1 + (1 + t) * p2) - ((1 + t) * q1 + t * q2)) \
        * (1 - abs(_sgn(smin(0, s, y))))
    term2 = (1 - abs(_sgn(smin(0, u, v)))) * smax(x, y)
    term3 = (((1 + t) * p1 + t * p2) - (t * q1 + (1 + t) * q2)) \
        * (1 - abs(_sgn(smin(0, x)))) * _sgn(smax(0, y)) * _sgn(smin(0, s))
    term4 = smax(u, v) * _sgn(smin(0, u, v))
    return abs(term1 + term2 + term3 + term4)


def _terms_h2(p, q):
    t = TAU
    p1, p2 = p
    q1, q2 = q
    d1, d2 = p1 - q1, p2 - q2
    half_t = t * _HALF
    return [
        (p1 + q1, p2 + q2),
        (abs(d1), half_t * (p1 + q1) + (p2 + q2) - half_t * abs(d1)),
        (smin(p1 + t * (q1 + q2), abs(d1 + t * p2)),
         smin(q2 + t * (p1 + p2), abs(d2 - t * q1))),
        (smin(abs(p1 - t * (q1 + q2)), abs(q1 - t * (p1 + p2))),
         smin(p2 + q1 + t * q2, q2 + p1 + t * p2, abs(t * d1 + d2))),
        (abs(smin(t * p1 + p2 - q1, p1 + q2, abs(p1 + t * p2 - t * (q1 + q2)))),
         abs(smin(p1 + q2, q1 + t * q2 - p2, abs(t * q1 + q2 - t * (p1 + p2))))),
        ((p1 + q1) + half_t * (p2 + q2) - half_t * abs(d2), abs(d2)),
        (abs(smin(-d1 + t * q2, q1 + t * (p1 + p2))),
         abs(smin(p2 + t * (q1 + q2), d2 + t * p1))),
        (smin(t * p1 + p2 + q1, p1 + t * q1 + q2, abs(d1 + t * d2)),
         smin(abs(q2 - t * (p1 + p2)), abs(p2 - t * (q1 + q2)))),
        (abs(smin(-p1 + t * q1 + q2, p2 + q1, abs(q1 + t * q2 - t * (p1 + p2)))),
         abs(smin(p1 + t * p2 - q2, p2 + q1, abs(t * p1 + p2 - t * (q1 + q2))))),
        (_h2_a(p1, p2, q1, q2), _h2_b(p1, p2, q1, q2)),
    ]


_TERM_FUNCS: dict[GroupId, Callable] = {
    GroupId.A2: _terms_a2,
    GroupId.C2: _terms_c2,
    GroupId.G2: _terms_g2,
    GroupId.H2: _terms_h2,
}


def _check_inputs(g: GroupId, lam: Point, mu: Point) -> None:
    for name, pt in (("lambda", lam), ("mu", mu)):
        if not isinstance(pt, Point):
            raise TypeError(f"{name} must be a Point")
        if not is_dominant(pt):
            raise DomainError(f"{name}={pt.pretty()} has a negative coordinate")


def raw_dominants(g: GroupId | str, lam: Point, mu: Point) -> list[Point]:
    """Candidate dominants of the closed formula, in term order, before merging."""
    g = GroupId.coerce(g)
    _check_inputs(g, lam, mu)
    coords = _TERM_FUNCS[g](pairings(g, lam), pairings(g, mu))
    return [to_dominant(g, Point(x, y))[0] for x, y in coords]


def raw_terms(g: GroupId | str, lam: Point, mu: Point,
              sizes: tuple[int, int] | None = None) -> list[Term]:
    """Unmerged terms ``k_i O(d_i)``.

    ``sizes`` overrides ``(|O(lam)|, |O(mu)|)``; limits use it to carry the generic
    orbit sizes along an approach path.
    """
    g = GroupId.coerce(g)
    order = group_data(g).order
    dominants = raw_dominants(g, lam, mu)
    s1, s2 = sizes if sizes is not None else (orbit_size(g, lam), orbit_size(g, mu))
    return [Term(d, Fraction(s1 * s2, order * orbit_size(g, d))) for d in dominants]


def decompose_formula(g: GroupId | str, lam: Point, mu: Point) -> Decomposition:
    """Merged closed-form decomposition of ``O(lam) x O(mu)``.

    Raises :class:`InconsistencyError` when sizes are not conserved or when lattice
    inputs produce a fractional multiplicity; either means a transcription bug.
    """
    g = GroupId.coerce(g)
    d = Decomposition.merge(g, raw_terms(g, lam, mu), lam, mu)
    if is_lattice_point(g, lam) and is_lattice_point(g, mu) \
            and not d.has_integer_multiplicities():
        raise InconsistencyError(
            f"fractional multiplicity for lattice inputs {lam.pretty()} x {mu.pretty()}: "
            f"{d.pretty()}")
    return d


def check_congruence(g: GroupId | str, lam: Point, mu: Point, d: Decomposition) -> bool:
    """Every term lies in the class ``K(lam) + K(mu)``; vacuously true for G2 and H2."""
    g = GroupId.coerce(g)
    mod = congruence_modulus(g)
    if g in (GroupId.G2, GroupId.H2) or mod is None:
        return True
    target = (congruence(g, lam) + congruence(g, mu)) % mod
    return all(congruence(g, t.dominant) == target for t in d.terms)
