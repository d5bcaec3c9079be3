from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbits.errors import DomainError
from orbits.groups import (
    GroupId, Point, alpha_to_omega, congruence, group_data, identity_check, is_dominant,
    is_lattice_point, negate_orbit_dominant, omega_to_alpha, orbit_points, orbit_size, reflect,
    roots, to_dominant,
)
from orbits.scalar import TAU, Scalar

from conftest import GROUPS, dominant_points, rational_points

t = TAU


def _pm(*pts):
    return [q for p in pts for q in (p, (-p[0], -p[1]))]


# printed orbit listings, as functions of the dominant coordinates
ORBIT_TABLES = {
    "A2": {
        "ab": lambda a, b: [(a, b), (-a, a + b), (a + b, -b), (-a - b, a), (b, -a - b), (-b, -a)],
        "a0": lambda a, b: [(a, 0), (-a, a), (0, -a)],
        "0b": lambda a, b: [(0, b), (b, -b), (-b, 0)],
    },
    "C2": {
        "ab": lambda a, b: _pm((a, b), (-a, a + b), (a + 2 * b, -b), (a + 2 * b, -a - b)),
        "a0": lambda a, b: _pm((a, 0), (-a, a)),
        "0b": lambda a, b: _pm((0, b), (2 * b, -b)),
    },
    "G2": {
        "ab": lambda a, b: _pm((a, b), (-a, 3 * a + b), (a + b, -b), (2 * a + b, -3 * a - b),
                               (-a - b, 3 * a + 2 * b), (-2 * a - b, 3 * a + 2 * b)),
        "a0": lambda a, b: _pm((a, 0), (-a, 3 * a), (2 * a, -3 * a)),
        "0b": lambda a, b: _pm((0, b), (b, -b), (-b, 2 * b)),
    },
    "H2": {
        "ab": lambda a, b: [(a, b), (-a, b + a * t), (a * t + b * t, -b - a * t),
                            (-a * t - b * t, a + b * t), (b, -a - b * t), (a + b * t, -b),
                            (-a - b * t, a * t + b * t), (b + a * t, -a * t - b * t),
                            (-b - a * t, a), (-b, -a)],
        "a0": lambda a, b: [(a, 0), (-a, a * t), (a * t, -a * t), (-a * t, a), (0, -a)],
        "0b": lambda a, b: [(0, b), (b * t, -b), (-b * t, b * t), (b, -b * t), (-b, 0)],
    },
}

SAMPLES = [(1, 2), (3, 1), (2, 5), (Fraction(1, 2), 3), (TAU, 1)]


@pytest.mark.parametrize("g", GROUPS)
@pytest.mark.parametrize("kind", ["ab", "a0", "0b"])
@pytest.mark.parametrize("a,b", SAMPLES)
def test_orbit_tables(g, kind, a, b):
    a, b = Scalar(a) if not isinstance(a, Scalar) else a, Scalar(b)
    dom = Point(0 if kind == "0b" else a, 0 if kind == "a0" else b)
    expected = {Point(*p) for p in ORBIT_TABLES[g][kind](a, b)}
    assert set(orbit_points(g, dom)) == expected


@pytest.mark.parametrize("g,order", [("A2", 6), ("C2", 8), ("G2", 12), ("H2", 10)])
def test_orbit_sizes(g, order):
    assert orbit_size(g, Point(1, 2)) == order
    assert orbit_size(g, Point(1, 0)) == order // 2
    assert orbit_size(g, Point(0, 3)) == order // 2
    assert orbit_size(g, Point(0, 0)) == 1
    assert len(roots(g)) == order


@pytest.mark.parametrize("g", GROUPS)
def test_cartan_inverse(g):
    assert identity_check(g)


@pytest.mark.parametrize("g", GROUPS)
def test_simple_reflection_negates_its_root(g):
    d = group_data(g)
    for k in (1, 2):
        alpha = Point(*d.alpha_in_omega[k - 1])
        assert reflect(g, k, alpha) == -alpha


def test_orbit_needs_dominant():
    with pytest.raises(DomainError):
        orbit_points("A2", Point(-1, 2))


def test_group_coercion():
    assert GroupId.coerce("h2") is GroupId.H2
    with pytest.raises(ValueError):
        GroupId.coerce("B3")


def test_congruence_numbers():
    assert congruence("A2", Point(1, 2)) == 1
    assert congruence("A2", Point(3, 1)) == 1
    assert congruence("C2", Point(3, 1)) == 1
    assert congruence("G2", Point(5, 7)) == 0
    assert congruence("H2", Point(1, 2)) is None


def test_lattice_membership():
    assert is_lattice_point("H2", Point(2 * TAU - 3, 1))
    assert not is_lattice_point("H2", Point(Fraction(1, 2), 1))
    assert not is_lattice_point("A2", Point(TAU, 1))


@pytest.mark.parametrize("g", GROUPS)
@given(data=st.data())
def test_reflections_are_involutions(g, data):
    p = data.draw(rational_points())
    for k in (1, 2):
        assert reflect(g, k, reflect(g, k, p)) == p


@pytest.mark.parametrize("g", GROUPS)
@given(data=st.data())
def test_to_dominant_idempotent_and_in_orbit(g, data):
    p = data.draw(rational_points())
    d, word = to_dominant(g, p)
    assert is_dominant(d)
    assert to_dominant(g, d) == (d, [])
    q = p
    for k in word:
        q = reflect(g, k, q)
    assert q == d
    assert p in orbit_points(g, d)


@pytest.mark.parametrize("g", GROUPS)
@given(data=st.data())
def test_single_dominant_per_orbit(g, data):
    d = data.draw(dominant_points(g))
    pts = orbit_points(g, d)
    assert [p for p in pts if is_dominant(p)] == [d]
    assert len(pts) == orbit_size(g, d)
    assert all(to_dominant(g, p)[0] == d for p in pts)


@pytest.mark.parametrize("g", GROUPS)
@given(data=st.data())
def test_negation_symmetry(g, data):
    d = data.draw(dominant_points(g))
    neg = {-p for p in orbit_points(g, d)}
    assert neg == set(orbit_points(g, negate_orbit_dominant(g, d)))


@pytest.mark.parametrize("g", GROUPS)
@given(data=st.data())
def test_basis_change_round_trip(g, data):
    p = data.draw(rational_points())
    assert alpha_to_omega(g, omega_to_alpha(g, p)) == p


@pytest.mark.parametrize("g", ["A2", "C2"])
@given(st.integers(-9, 9), st.integers(-9, 9))
def test_congruence_constant_on_orbits(g, x, y):
    p = Point(x, y)
    d = to_dominant(g, p)[0]
    assert {congruence(g, q) for q in orbit_points(g, d)} == {congruence(g, d)}


def test_reflection_examples():
    a, b = Scalar(2), Scalar(5)
    assert reflect("A2", 1, Point(a, b)) == Point(-a, a + b)
    assert reflect("H2", 2, Point(a, b)) == Point(a + b * TAU, -b)
    for g in GROUPS:
        assert reflect(g, 1, Point(0, 0)) == Point(0, 0)


def test_dominant_reduction_examples():
    assert to_dominant("A2", Point(-1, 3)) == (Point(1, 2), [1])
    assert to_dominant("A2", Point(0, 0)) == (Point(0, 0), [])
    assert to_dominant("A2", Point(0, -5))[0] == Point(5, 0)


def test_basis_change_examples():
    assert omega_to_alpha("A2", Point(2, -1)) == Point(1, 0)
    assert alpha_to_omega("A2", Point(1, 0)) == Point(2, -1)
    assert omega_to_alpha("H2", Point(1, 0)) == Point((4 + 2 * TAU) / 5, (1 + 3 * TAU) / 5)


def test_negation_examples():
    assert negate_orbit_dominant("A2", Point(1, 2)) == Point(2, 1)
    assert negate_orbit_dominant("C2", Point(1, 2)) == Point(1, 2)
    assert negate_orbit_dominant("H2", Point(3, 1)) == Point(1, 3)


def test_congruence_rejects_real_coordinates():
    with pytest.raises(DomainError):
        congruence("A2", Point(Fraction(1, 2), 1))
    assert congruence("C2", Point(4, 3)) == 0
