import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbits.scalar import (
    ONE, TAU, ZERO, Scalar, ScalarParseError, as_scalar, parse_scalar, sign, smax, smin,
)

from conftest import scalars

SQRT5 = math.sqrt(5)


def test_golden_ratio_identities():
    assert TAU * TAU == TAU + 1
    assert TAU * (TAU - 1) == ONE
    assert TAU.conjugate() == 1 - TAU
    assert TAU * TAU.conjugate() == Scalar(-1)


def test_signs_near_cancellation():
    # 2tau - 3 ~ 0.236, 8 - 5tau ~ -0.09
    assert sign(2 * TAU - 3) == 1
    assert sign(8 - 5 * TAU) == -1
    assert sign(Scalar(89) - 55 * TAU) == 1
    assert sign(ZERO) == 0


def test_min_max_mixed():
    assert smax(2 - TAU, 3 * TAU - 4) == 3 * TAU - 4
    assert smin(TAU, Scalar(Fraction(8, 5))) == Scalar(Fraction(8, 5))


def test_division_by_rational_only():
    assert (TAU + 1) / 2 == Scalar(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        TAU / 0
    with pytest.raises(TypeError):
        ONE / TAU


def test_refuses_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        TAU + 0.5


def test_hash_matches_rationals():
    assert hash(Scalar(3)) == hash(3)
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({Scalar(2), Scalar(2, 0), Scalar(Fraction(4, 2))}) == 1


@pytest.mark.parametrize("text,expected", [
    ("3", Scalar(3)),
    ("-1/2", Scalar(Fraction(-1, 2))),
    ("t", TAU),
    ("2t", 2 * TAU),
    ("3/2+1t", Scalar(Fraction(3, 2), 1)),
    ("2-1t", 2 - TAU),
    ("-t", -TAU),
    ("1-t", 1 - TAU),
])
def test_parse_examples(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "0.5", "1/0", "3t2", "1//2", "tt", "3 2t", "t+1", "2/-3",
                                  "+", "1e3"])
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError) as exc:
        parse_scalar(text)
    assert 0 <= exc.value.pos <= len(text)


def test_pretty_forms():
    assert (2 - TAU).pretty() == "2-τ"
    assert (2 * TAU - 3).pretty() == "2τ-3"
    assert (1 + TAU).pretty() == "1+τ"
    assert (-TAU).pretty() == "-τ"


@given(scalars)
def test_str_round_trip(x):
    assert parse_scalar(str(x)) == x


@given(scalars)
def test_json_round_trip(x):
    assert Scalar.from_json(x.to_json()) == x


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * b == b * a


@given(scalars, scalars)
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(scalars)
def test_sign_matches_float_when_clear(x):
    v = x.rat + x.tau_coeff * (1 + SQRT5) / 2
    if abs(v) > 1e-9:
        assert sign(x) == (1 if v > 0 else -1)


@given(scalars, scalars)
def test_order_is_compatible_with_addition(a, b):
    assert (a < b) == (a - b < ZERO)
    assert (a < b) + (a == b) + (a > b) == 1


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_golden_integers(a, b):
    x = Scalar(a, b)
    assert x.in_golden_integers()
    assert not (x + Scalar(Fraction(1, 2))).in_golden_integers()
