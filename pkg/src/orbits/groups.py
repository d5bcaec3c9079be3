"""Rank-2 Coxeter groups A2, C2, G2, H2 acting on points in fundamental-weight coordinates.

Points are always stored in the omega basis: ``Point(x, y)`` is ``x*w1 + y*w2``.
The simple reflection ``r_k`` then reads ``p - p_k * alpha_k`` where ``alpha_k`` is the
k-th row of the Cartan matrix, so no inner products are needed at runtime.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .scalar import ONE, TAU, ZERO, Scalar, as_scalar

__all__ = [
    "GroupId", "GroupData", "Point", "group_data", "reflect", "to_dominant",
    "orbit_points", "orbit_size", "congruence", "congruence_modulus",
    "omega_to_alpha", "alpha_to_omega", "negate_orbit_dominant", "is_dominant",
    "is_lattice_point", "roots",
]


class GroupId(str, enum.Enum):
    A2 = "A2"
    C2 = "C2"
    G2 = "G2"
    H2 = "H2"

    @classmethod
    def coerce(cls, value: "GroupId | str") -> "GroupId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise DomainError(f"unknown group {value!r}; expected one of A2, C2, G2, H2") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Point:
    x: Scalar
    y: Scalar

    def __init__(self, x, y) -> None:
        object.__setattr__(self, "x", as_scalar(x))
        object.__setattr__(self, "y", as_scalar(y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scale(self, c) -> Point:
        return Point(self.x * c, self.y * c)

    def __iter__(self):
        yield self.x
        yield self.y

    def __getitem__(self, i: int) -> Scalar:
        return (self.x, self.y)[i]

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"

    def __str__(self) -> str:
        return f"{self.x},{self.y}"

    def pretty(self) -> str:
        return f"({self.x.pretty()}, {self.y.pretty()})"

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> Point:
        return cls(Scalar.from_json(obj["x"]), Scalar.from_json(obj["y"]))


ORIGIN = Point(0, 0)

Matrix = tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]


def _m(a, b, c, d) -> Matrix:
    return ((as_scalar(a), as_scalar(b)), (as_scalar(c), as_scalar(d)))


@dataclass(frozen=True)
class GroupData:
    """Static description of one group.

    ``alpha_in_omega`` rows are the simple roots in the omega basis (equal to the
    Cartan matrix rows).  ``pairing[j]`` converts the j-th omega coordinate of a point
    into ``<point | alpha_j>``.  ``gram`` holds the simple-root inner products.
    """

    gid: GroupId
    order: int
    alpha_in_omega: Matrix
    pairing: tuple[Fraction, Fraction]
    cartan: Matrix
    cartan_inverse: Matrix
    gram: Matrix
    mirror_angle_divisor: int
    congruence_modulus: int | None

    @property
    def half_order(self) -> int:
        return self.order // 2


_H = Fraction(1, 2)
_FIFTH = Fraction(1, 5)

_DATA = {
    GroupId.A2: GroupData(
        GroupId.A2, 6,
        alpha_in_omega=_m(2, -1, -1, 2),
        pairing=(Fraction(1), Fraction(1)),
        cartan=_m(2, -1, -1, 2),
        cartan_inverse=_m(Fraction(2, 3), Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)),
        gram=_m(2, -1, -1, 2),
        mirror_angle_divisor=3,
        congruence_modulus=3,
    ),
    GroupId.C2: GroupData(
        GroupId.C2, 8,
        alpha_in_omega=_m(2, -1, -2, 2),
        pairing=(_H, Fraction(1)),
        cartan=_m(2, -1, -2, 2),
        cartan_inverse=_m(1, _H, 1, 1),
        gram=_m(1, -1, -1, 2),
        mirror_angle_divisor=4,
        congruence_modulus=2,
    ),
    GroupId.G2: GroupData(
        GroupId.G2, 12,
        alpha_in_omega=_m(2, -3, -1, 2),
        pairing=(Fraction(1), Fraction(1, 3)),
        cartan=_m(2, -3, -1, 2),
        cartan_inverse=_m(2, 3, 1, 2),
        gram=_m(2, -1, -1, Fraction(2, 3)),
        mirror_angle_divisor=6,
        congruence_modulus=1,
    ),
    GroupId.H2: GroupData(
        GroupId.H2, 10,
        alpha_in_omega=_m(2, -TAU, -TAU, 2),
        pairing=(Fraction(1), Fraction(1)),
        cartan=_m(2, -TAU, -TAU, 2),
        cartan_inverse=_m((4 + 2 * TAU) * _FIFTH, (1 + 3 * TAU) * _FIFTH,
                          (1 + 3 * TAU) * _FIFTH, (4 + 2 * TAU) * _FIFTH),
        gram=_m(2, -TAU, -TAU, 2),
        mirror_angle_divisor=5,
        congruence_modulus=None,
    ),
}


def group_data(g: GroupId | str) -> GroupData:
    return _DATA[GroupId.coerce(g)]


def reflect(g: GroupId | str, k: int, p: Point) -> Point:
    """Apply the simple reflection ``r_k`` (k in {1, 2})."""
    if k not in (1, 2):
        raise DomainError(f"reflection index must be 1 or 2, got {k}")
    ax, ay = group_data(g).alpha_in_omega[k - 1]
    c = p[k - 1]
    return Point(p.x - c * ax, p.y - c * ay)


def is_dominant(p: Point) -> bool:
    return p.x >= 0 and p.y >= 0


def to_dominant(g: GroupId | str, p: Point) -> tuple[Point, list[int]]:
    """Reflect ``p`` into the dominant chamber; returns the point and the word applied.

    Fixes a negative x with ``r_1`` first, then a negative y with ``r_2``, and repeats.
    """
    g = GroupId.coerce(g)
    word: list[int] = []
    limit = group_data(g).order
    while True:
        if p.x < 0:
            k = 1
        elif p.y < 0:
            k = 2
        else:
            return p, word
        p = reflect(g, k, p)
        word.append(k)
        if len(word) > limit:  # longest element has length |G|/2
            raise RuntimeError(f"dominant reduction did not terminate for {p!r}")


@lru_cache(maxsize=4096)
def _closure(g: GroupId, seed: Point) -> tuple[Point, ...]:
    seen = {seed}
    order = [seed]
    queue = deque([seed])
    while queue:
        p = queue.popleft()
        for k in (1, 2):
            q = reflect(g, k, p)
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return tuple(order)


def orbit_points(g: GroupId | str, dominant: Point) -> list[Point]:
    """All distinct points of the orbit, generated by reflection closure (BFS order)."""
    g = GroupId.coerce(g)
    if not is_dominant(dominant):
        raise DomainError(f"{dominant!r} is not dominant")
    return list(_closure(g, dominant))


def orbit_size(g: GroupId | str, dominant: Point) -> int:
    data = group_data(g)
    if not is_dominant(dominant):
        raise DomainError(f"{dominant!r} is not dominant")
    nonzero = (dominant.x != 0) + (dominant.y != 0)
    return (1, data.half_order, data.order)[nonzero]


def roots(g: GroupId | str) -> list[Point]:
    """The full root system in omega coordinates (orbits of the simple roots)."""
    g = GroupId.coerce(g)
    out: list[Point] = []
    for row in group_data(g).alpha_in_omega:
        for r in _closure(g, Point(*row)):
            if r not in out:
                out.append(r)
    return out


def is_lattice_point(g: GroupId | str, p: Point) -> bool:
    """Weight-lattice membership: integer coordinates, or Z[tau] coordinates for H2."""
    if GroupId.coerce(g) is GroupId.H2:
        return p.x.in_golden_integers() and p.y.in_golden_integers()
    return p.x.is_integer() and p.y.is_integer()


def congruence_modulus(g: GroupId | str) -> int | None:
    return group_data(g).congruence_modulus


def congruence(g: GroupId | str, p: Point) -> int | None:
    """Congruence number: A2 ``2a+b mod 3``, C2 ``a mod 2``, G2 always 0, H2 undefined."""
    g = GroupId.coerce(g)
    if g is GroupId.H2:
        return None
    if g is GroupId.G2:
        return 0
    if not (p.x.is_integer() and p.y.is_integer()):
        raise DomainError(f"congruence class needs integer coordinates, got {p!r}")
    a, b = int(p.x.rat), int(p.y.rat)
    if g is GroupId.A2:
        return (2 * a + b) % 3
    return a % 2


def _row_times(v: Iterable[Scalar], m: Matrix) -> Point:
    x, y = v
    return Point(x * m[0][0] + y * m[1][0], x * m[0][1] + y * m[1][1])


def omega_to_alpha(g: GroupId | str, p: Point) -> Point:
    """Coordinates of ``p`` in the simple-root basis."""
    return _row_times(p, group_data(g).cartan_inverse)


def alpha_to_omega(g: GroupId | str, p: Point) -> Point:
    """Inverse of :func:`omega_to_alpha`; ``p`` holds simple-root coordinates."""
    return _row_times(p, group_data(g).cartan)


def negate_orbit_dominant(g: GroupId | str, dominant: Point) -> Point:
    """Dominant point of ``-O(dominant)``: swapped for A2 and H2, unchanged for C2 and G2."""
    g = GroupId.coerce(g)
    if not is_dominant(dominant):
        raise DomainError(f"{dominant!r} is not dominant")
    if g in (GroupId.A2, GroupId.H2):
        return Point(dominant.y, dominant.x)
    return dominant


def pairings(g: GroupId | str, p: Point) -> tuple[Scalar, Scalar]:
    """``(<p|alpha_1>, <p|alpha_2>)`` from omega coordinates."""
    c1, c2 = group_data(g).pairing
    return p.x * c1, p.y * c2


def identity_check(g: GroupId | str) -> bool:
    """``cartan @ cartan_inverse`` is the identity."""
    c, ci = group_data(g).cartan, group_data(g).cartan_inverse
    prod = [[sum((c[i][k] * ci[k][j] for k in range(2)), ZERO) for j in range(2)]
            for i in range(2)]
    return prod == [[ONE, ZERO], [ZERO, ONE]]
