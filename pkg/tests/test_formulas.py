from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbits.decomposition import Decomposition, Term
from orbits.errors import DomainError, InconsistencyError
from orbits.formulas import check_congruence, decompose_formula, raw_dominants, raw_terms
from orbits.groups import GroupId, Point, group_data, orbit_size
from orbits.oracle import decompose_oracle, product_points
from orbits.scalar import TAU

from conftest import GROUPS, dominant_points

t = TAU
P = Point

# O(1,2) x O(3,1) in each group
GOLDEN = {
    "A2": [(P(4, 3), 1), (P(2, 4), 1), (P(3, 2), 1), (P(5, 1), 1), (P(0, 2), 2), (P(1, 0), 2)],
    "C2": [(P(4, 3), 1), (P(6, 1), 1), (P(4, 2), 1), (P(2, 4), 1), (P(2, 2), 1), (P(2, 1), 1),
           (P(0, 2), 2), (P(0, 1), 2)],
    "G2": [(P(4, 3), 1), (P(5, 1), 1), (P(3, 4), 1), (P(2, 6), 1), (P(1, 6), 1), (P(1, 5), 1),
           (P(1, 3), 1), (P(0, 8), 2), (P(0, 6), 2), (P(0, 4), 2), (P(0, 3), 2), (P(1, 1), 1)],
    "H2": [(P(4, 3), 1), (P(2, 3 + t), 1), (P(2 - t, 3 * t - 1), 1), (P(t - 1, 1), 1),
           (P(2 + t, 1 + t), 1), (P(4 + t, 1), 1), (P(2 * t - 3, 3 * t - 2), 1),
           (P(2 * t - 2, 3 * t - 1), 1), (P(3 * t - 3, 2 * t - 1), 1), (P(1, 0), 2)],
}
GOLDEN_SIZE = {"A2": 36, "C2": 64, "G2": 144, "H2": 100}


@pytest.mark.parametrize("g", GROUPS)
def test_golden_product(g):
    lam, mu = P(1, 2), P(3, 1)
    expected = Decomposition.from_pairs(g, GOLDEN[g], lam, mu)
    assert decompose_formula(g, lam, mu) == expected
    assert decompose_oracle(g, lam, mu) == expected
    assert expected.total_size() == GOLDEN_SIZE[g]


def test_golden_congruence_classes():
    assert decompose_formula("A2", P(1, 2), P(3, 1)).congruence_class() == 2
    assert decompose_formula("C2", P(1, 2), P(3, 1)).congruence_class() == 0


@pytest.mark.parametrize("g", GROUPS)
def test_one_term_per_group_element(g):
    assert len(raw_dominants(g, P(1, 2), P(3, 1))) == group_data(g).order


@pytest.mark.parametrize("g", GROUPS)
def test_identity_factor(g):
    lam = P(2, 1)
    d = decompose_formula(g, lam, P(0, 0))
    assert d == Decomposition.from_pairs(g, [(lam, 1)], lam, P(0, 0))


@pytest.mark.parametrize("g", GROUPS)
def test_rejects_non_dominant(g):
    with pytest.raises(DomainError):
        decompose_formula(g, P(-1, 2), P(1, 1))


def test_oracle_point_count():
    pts = product_points("G2", P(1, 2), P(3, 1))
    assert sum(pts.values()) == 144


def test_decomposition_rejects_bad_terms():
    with pytest.raises(DomainError):
        Term(P(-1, 0), Fraction(1))
    with pytest.raises(DomainError):
        Term(P(1, 0), Fraction(-1))
    with pytest.raises(InconsistencyError):
        Decomposition.from_pairs("A2", [(P(1, 0), 1)], P(1, 0), P(1, 0))


def test_diff_reports_both_sides():
    a = Decomposition.from_pairs("A2", [(P(1, 0), 2), (P(0, 1), 1)])
    b = Decomposition.from_pairs("A2", [(P(1, 0), 1), (P(2, 0), 1)])
    assert a.diff(b) == [(P(0, 1), 1, 0), (P(1, 0), 2, 1), (P(2, 0), 0, 1)]


@pytest.mark.parametrize("g", GROUPS)
@settings(max_examples=40)
@given(data=st.data())
def test_formula_matches_oracle(g, data):
    lam, mu = data.draw(dominant_points(g)), data.draw(dominant_points(g))
    assert decompose_formula(g, lam, mu) == decompose_oracle(g, lam, mu)


@pytest.mark.parametrize("g", GROUPS)
@settings(max_examples=40)
@given(data=st.data())
def test_commutative_and_conserved(g, data):
    lam, mu = data.draw(dominant_points(g)), data.draw(dominant_points(g))
    d = decompose_formula(g, lam, mu)
    assert d == decompose_formula(g, mu, lam)
    assert d.total_size() == orbit_size(g, lam) * orbit_size(g, mu)
    assert check_congruence(g, lam, mu, d)


@pytest.mark.parametrize("g", GROUPS)
@settings(max_examples=40)
@given(data=st.data(), c=st.sampled_from([Fraction(1, 2), Fraction(2), Fraction(3, 2)]))
def test_homogeneous_in_scale(g, data, c):
    lam, mu = data.draw(dominant_points(g)), data.draw(dominant_points(g))
    d = decompose_formula(g, lam, mu)
    scaled = decompose_formula(g, lam.scale(c), mu.scale(c))
    assert scaled.as_dict() == {p.scale(c): m for p, m in d.as_dict().items()}


@pytest.mark.parametrize("g", ["A2", "C2", "G2"])
@settings(max_examples=40)
@given(data=st.data())
def test_integer_multiplicities_on_lattice(g, data):
    lam, mu = data.draw(dominant_points(g)), data.draw(dominant_points(g))
    assert decompose_formula(g, lam, mu).has_integer_multiplicities()


@pytest.mark.parametrize("g", GROUPS)
def test_raw_terms_size_override(g):
    lam, mu = P(1, 2), P(3, 0)
    order = group_data(g).order
    terms = raw_terms(g, lam, mu, sizes=(order, order))
    total = sum(tm.multiplicity * orbit_size(g, tm.dominant) for tm in terms)
    assert total == order * order


def test_group_enum_passthrough():
    assert decompose_formula(GroupId.A2, P(1, 0), P(1, 0)) == \
        decompose_formula("a2", P(1, 0), P(1, 0))
