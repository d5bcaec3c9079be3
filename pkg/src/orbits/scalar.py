"""Exact arithmetic in the golden field Q(tau), tau = (1 + sqrt 5) / 2.

A :class:`Scalar` ``a + b*tau`` is stored as two reduced :class:`~fractions.Fraction`
coefficients.  Products are normalised with ``tau**2 = tau + 1`` and the sign of a
value is decided exactly, so comparisons never depend on floating point.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

__all__ = ["Scalar", "ScalarParseError", "TAU", "ZERO", "ONE", "as_scalar", "parse_scalar", "sign",
           "smin", "smax"]

TAU_FLOAT = (1 + math.sqrt(5)) / 2

ScalarLike = Union["Scalar", int, Fraction]


class ScalarParseError(ValueError):
    """Malformed scalar literal; ``pos`` is the offending character offset."""

    def __init__(self, text: str, pos: int, reason: str) -> None:
        super().__init__(f"{reason} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos
        self.reason = reason


def _rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, bool):
        return Fraction(int(value))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@total_ordering
class Scalar:
    """Immutable element ``rat + tau_coeff * tau`` of Q(tau)."""

    __slots__ = ("_r", "_t")

    def __init__(self, rat: ScalarLike = 0, tau_coeff: int | Fraction = 0) -> None:
        if isinstance(rat, Scalar):
            r, t = rat._r, rat._t + _rational(tau_coeff)
        else:
            r, t = _rational(rat), _rational(tau_coeff)
        object.__setattr__(self, "_r", r)
        object.__setattr__(self, "_t", t)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def rat(self) -> Fraction:
        return self._r

    @property
    def tau_coeff(self) -> Fraction:
        return self._t

    def is_rational(self) -> bool:
        return self._t == 0

    def is_integer(self) -> bool:
        return self._t == 0 and self._r.denominator == 1

    def in_golden_integers(self) -> bool:
        """True when both coefficients are integers, i.e. the value lies in Z[tau]."""
        return self._r.denominator == 1 and self._t.denominator == 1

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return Scalar(self._r + o._r, self._t + o._t)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self._r, -self._t)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other: ScalarLike) -> Scalar:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return Scalar(self._r - o._r, self._t - o._t)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._r, self._t, o._r, o._t
        # (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
        return Scalar(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Scalar:
        # Only rational divisors; tau-valued quantities never appear in a denominator.
        if isinstance(other, Scalar):
            if not other.is_rational():
                raise TypeError("division by an irrational Scalar is not supported")
            other = other._r
        try:
            d = _rational(other)
        except TypeError:
            return NotImplemented
        if d == 0:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(self._r / d, self._t / d)

    def conjugate(self) -> Scalar:
        """Galois conjugate, sending tau to tau' = 1 - tau."""
        return Scalar(self._r + self._t, -self._t)

    # order ------------------------------------------------------------------

    def sign(self) -> int:
        # value = (u + v*sqrt5)/2 with u = 2a + b, v = b
        u = 2 * self._r + self._t
        v = self._t
        if u >= 0 and v >= 0:
            return 0 if (u == 0 and v == 0) else 1
        if u <= 0 and v <= 0:
            return -1
        if u > 0:  # v < 0
            d = u * u - 5 * v * v
        else:  # u < 0 < v
            d = 5 * v * v - u * u
        return (d > 0) - (d < 0)

    def __eq__(self, other) -> bool:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return self._r == o._r and self._t == o._t

    def __lt__(self, other) -> bool:
        o = as_scalar(other, strict=False)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self._t == 0:
            return hash(self._r)
        return hash((self._r, self._t))

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self._r) or bool(self._t)

    def __float__(self) -> float:
        return float(self._r) + float(self._t) * TAU_FLOAT

    # text -------------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        r, t = self._r, self._t
        if t == 0:
            return str(r)
        tpart = ("" if abs(t) == 1 else str(abs(t))) + "t"
        if r == 0:
            return ("-" if t < 0 else "") + tpart
        return f"{r}{'-' if t < 0 else '+'}{tpart}"

    def pretty(self) -> str:
        """Human form with a unicode tau, e.g. ``2τ-3``."""
        r, t = self._r, self._t
        if t == 0:
            return str(r)
        mag = ("" if abs(t) == 1 else str(abs(t))) + "τ"
        if r == 0:
            return ("-" if t < 0 else "") + mag
        if t > 0 and r < 0:
            return f"{mag}-{-r}"
        return f"{r}{'-' if t < 0 else '+'}{mag}"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        return parse_scalar(text)

    def to_json(self) -> dict:
        return {"r": _frac_str(self._r), "t": _frac_str(self._t)}

    @classmethod
    def from_json(cls, obj: dict) -> Scalar:
        return cls(Fraction(obj["r"]), Fraction(obj["t"]))


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


TAU = Scalar(0, 1)
ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value, strict: bool = True) -> Scalar | None:
    """Coerce ints/Fractions to :class:`Scalar`; floats are refused."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) or (
        isinstance(value, Rational) and not isinstance(value, float)
    ):
        return Scalar(value)
    if strict:
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")
    return None


def sign(x: ScalarLike) -> int:
    return as_scalar(x).sign()


def smin(*xs: ScalarLike) -> Scalar:
    return min(as_scalar(x) for x in xs)


def smax(*xs: ScalarLike) -> Scalar:
    return max(as_scalar(x) for x in xs)


# scalar := rat | rat? sign? rat 't' | sign? rat 't'   (a bare "t" means 1t)
_RAT = r"\d+(?:/\d+)?"
_LITERAL = re.compile(
    rf"^(?:(?P<r1>[+-]?{_RAT})"
    rf"|(?P<r2>[+-]?{_RAT})?(?P<ts>[+-])(?P<tc2>{_RAT})?t"
    rf"|(?P<tc3>{_RAT})?t)$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse literals such as ``3``, ``-1/2``, ``t``, ``2t``, ``3/2+1t``, ``2-1t``."""
    if not isinstance(text, str):
        raise TypeError("scalar literal must be a string")
    body = text.strip()
    m = _LITERAL.match(body)
    if m is None:
        raise ScalarParseError(text, _first_bad(text), "malformed scalar literal")
    if "/0" in re.sub(r"/0*[1-9]", "", body):
        raise ScalarParseError(text, text.index("/"), "zero denominator")
    if m.group("r1") is not None:
        return Scalar(Fraction(m.group("r1")))
    rat = Fraction(m.group("r2") or 0)
    coeff = Fraction(m.group("tc2") or m.group("tc3") or 1)
    if m.group("ts") == "-":
        coeff = -coeff
    return Scalar(rat, coeff)


def _first_bad(text: str) -> int:
    for i, ch in enumerate(text):
        if ch not in "0123456789/+-t ":
            return i
    return len(text)
