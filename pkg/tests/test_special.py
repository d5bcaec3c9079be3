from collections import defaultdict
from fractions import Fraction
from itertools import product

import pytest

from orbits.errors import DomainError
from orbits.formulas import decompose_formula
from orbits.groups import Point
from orbits.oracle import decompose_oracle
from orbits.scalar import TAU, Scalar
from orbits.special import CASES, branch_of, case_names, factors_of, special_case

RATIONAL_POOL = [Scalar(v) for v in (1, 2, 3, 4, 5, 7, 11)] + [Scalar(Fraction(5, 2))]
GOLDEN_POOL = RATIONAL_POOL[:5] + [TAU, 2 * TAU, 1 + TAU, 3 - TAU, TAU - 1]

EXPECTED_BRANCHES = {
    ("A2", "a0 x 0b"): {"a>b", "a<b", "a=b"},
    ("A2", "ab x c0"): {"a2>b1, a1>b1", "a2>b1, a1<b1", "a2<b1, a1>b1",
                        "a2<b1, a1<b1, a1+a2>b1", "a2<b1, a1<b1, a1+a2<b1"},
    ("A2", "ab x a0"): {"a1<a2", "a1>a2"},
    ("A2", "generic"): {f"subcase {k}" for k in "123456"},
    ("G2", "ab x ba"): {"max>2min", "max<2min"},
}


def instances(group, name, per_branch=3):
    """Up to ``per_branch`` parameter tuples for every reachable branch."""
    case = CASES[(group, name)]
    pool = GOLDEN_POOL if group.value == "H2" else RATIONAL_POOL
    found = defaultdict(list)
    for params in product(pool, repeat=len(case.params)):
        try:
            label = branch_of(group, name, *params)
        except DomainError:
            continue
        if len(found[label]) < per_branch:
            found[label].append(params)
    return found


ALL_CASES = case_names()


@pytest.mark.parametrize("key", ALL_CASES, ids=[f"{g.value}:{n}" for g, n in ALL_CASES])
def test_identity_matches_formula(key):
    g, name = key
    found = instances(g, name)
    want = EXPECTED_BRANCHES.get((g.value, name))
    if want is not None:
        assert set(found) == want
    for label, plist in found.items():
        assert len(plist) >= 3 or not CASES[key].params
        for params in plist:
            lam, mu = factors_of(g, name, *params)
            assert special_case(g, name, *params) == decompose_formula(g, lam, mu), \
                (label, params)


@pytest.mark.parametrize("key", ALL_CASES, ids=[f"{g.value}:{n}" for g, n in ALL_CASES])
def test_identity_matches_oracle(key):
    g, name = key
    for plist in instances(g, name, per_branch=1).values():
        lam, mu = factors_of(g, name, *plist[0])
        assert special_case(g, name, *plist[0]) == decompose_oracle(g, lam, mu)


def test_tau_instances():
    assert special_case("H2", "t0 x 1/t0") == decompose_formula(
        "H2", Point(TAU, 0), Point(TAU - 1, 0))
    d = special_case("H2", "t0 x 1/t0")
    assert {tm.dominant for tm in d} == {Point(1, 1), Point(2 * TAU - 1, 0),
                                          Point(TAU - 1, TAU - 1)}


PRINTED = [k for k, c in CASES.items() if c.printed is not None]


@pytest.mark.parametrize("key", PRINTED, ids=[f"{g.value}:{n}" for g, n in PRINTED])
def test_printed_variant_is_wrong_somewhere(key):
    # the stored corrections are needed: the printed form disagrees on some instance
    g, name = key
    wrong = 0
    for plist in instances(g, name).values():
        for params in plist:
            lam, mu = factors_of(g, name, *params)
            wrong += special_case(g, name, *params, printed=True) != decompose_formula(g, lam, mu)
    assert wrong > 0


@pytest.mark.parametrize("g,name,params", [
    ("A2", "a0 x b0", (2, 2)),
    ("A2", "ab x c0", (2, 1, 3)),
    ("A2", "generic", (1, 1, 1, 1)),
    ("G2", "ab x ba", (2, 1)),
    ("C2", "aa x aa", (0,)),
    ("H2", "ab x ab", (1, 1)),
])
def test_side_conditions_enforced(g, name, params):
    with pytest.raises(DomainError):
        special_case(g, name, *params)


def test_unknown_pattern():
    with pytest.raises(DomainError):
        special_case("A2", "nope")
    with pytest.raises(DomainError):
        special_case("A2", "a0 x b0", 1)
