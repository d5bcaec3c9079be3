"""Closed-form special products, instantiated on demand.

Each entry is a symbolic identity such as ``O(a,0) x O(b,0) = O(a+b,0) u O(|a-b|,min)``
for one group, with its side conditions.  They are independent test oracles for
:func:`orbits.formulas.decompose_formula`.

A few printed identities do not conserve orbit size; those are stored corrected and
their printed form is kept in ``printed`` so the discrepancy stays inspectable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .decomposition import Decomposition, Term
from .errors import DomainError
from .groups import GroupId, Point, group_data, orbit_size, to_dominant
from .scalar import TAU, Scalar, as_scalar, smin

__all__ = ["SpecialCase", "CASES", "special_case", "case_names", "branch_of", "factors_of"]

Pairs = list  # [((x, y), multiplicity) | ((x, y), None)]; None means standard weight


@dataclass(frozen=True)
class SpecialCase:
    group: GroupId
    name: str
    factors: Callable[..., tuple[tuple, tuple]]
    build: Callable[..., Pairs]
    params: tuple[str, ...]
    # returns a branch label, or raises DomainError when side conditions fail
    branch: Callable[..., str]
    printed: Callable[..., Pairs] | None = None
    note: str = ""


def _pos(*xs) -> None:
    if any(x <= 0 for x in xs):
        raise DomainError("parameters must be strictly positive")


def _distinct(*xs) -> None:
    if len(set(xs)) != len(xs):
        raise DomainError("parameters must be pairwise distinct")


def _ab_distinct(a, b) -> str:
    _pos(a, b)
    _distinct(a, b)
    return "a>b" if a > b else "a<b"


def _a_only(a) -> str:
    _pos(a)
    return "a>0"


# --- A2 ----------------------------------------------------------------------

def _a2_a0_0b_branch(a, b):
    _pos(a, b)
    return "a>b" if a > b else ("a<b" if a < b else "a=b")


def _a2_a0_0b(a, b):
    if a > b:
        return [((a, b), 1), ((a - b, 0), 1)]
    if a < b:
        return [((0, b - a), 1), ((a, b), 1)]
    return [((a, a), 1), ((0, 0), 3)]


def _a2_ab_c0_branch(a1, a2, b1):
    _pos(a1, a2, b1)
    _distinct(a1, a2, b1)
    if a1 + a2 == b1:
        raise DomainError("a1 + a2 = b1 is not covered by the listed subcases")
    if a2 > b1:
        return "a2>b1, a1>b1" if a1 > b1 else "a2>b1, a1<b1"
    if a1 > b1:
        return "a2<b1, a1>b1"
    return "a2<b1, a1<b1, a1+a2>b1" if a1 + a2 > b1 else "a2<b1, a1<b1, a1+a2<b1"


def _a2_ab_c0(a1, a2, b1):
    br = _a2_ab_c0_branch(a1, a2, b1)
    first = ((a1 + b1, a2), 1)
    return {
        "a2>b1, a1>b1": [first, ((a1 - b1, a2 + b1), 1), ((a1, a2 - b1), 1)],
        "a2>b1, a1<b1": [first, ((b1 - a1, a1 + a2), 1), ((a1, a2 - b1), 1)],
        "a2<b1, a1>b1": [first, ((a1 - b1, a2 + b1), 1), ((a1 + a2 - b1, b1 - a2), 1)],
        "a2<b1, a1<b1, a1+a2>b1": [first, ((b1 - a1, a1 + a2), 1),
                                    ((a1 + a2 - b1, b1 - a2), 1)],
        "a2<b1, a1<b1, a1+a2<b1": [first, ((b1 - a1, a1 + a2), 1), ((b1 - a1 - a2, a1), 1)],
    }[br]


def _a2_ab_c0_compact(a1, a2, b1):
    return [((a1 + b1, a2), 1),
            ((abs(a1 + smin(0, a2 - b1)), abs(smin(a1, b1 - a2))), 1),
            ((abs(a1 - b1), a2 + smin(a1, b1)), 1)]


def _a2_ab_c0_compact_printed(a1, a2, b1):
    return [((a1 + b1, a2), 1),
            ((abs(a1 + smin(0, a2 - b1)), smin(a1, b1 - a2)), 1),
            ((abs(a1 - b1), a2 + smin(a1, b1)), 1)]


def _a2_ab_a0_branch(a1, a2):
    _pos(a1, a2)
    _distinct(a1, a2)
    return "a1<a2" if a1 < a2 else "a1>a2"


def _a2_ab_a0(a1, a2):
    last = ((a1, a2 - a1), 1) if a1 < a2 else ((a2, a1 - a2), 1)
    return [((2 * a1, a2), 1), ((0, a1 + a2), 2), last]


def _a2_ab_a0_printed(a1, a2):
    return [((2 * a1, a2), 1), ((smin(a1, a2), abs(a1 - a2)), 1)]


_GENERIC_A2 = (
    ("1", lambda a1, a2, b1, b2: -a1 + b2 > a2 - b1 and a1 < b1 and a2 > b2
     and a1 + a2 > b1 and a1 > b2),
    ("2", lambda a1, a2, b1, b2: -a1 + b2 > a2 - b1 and a1 < b1 and a2 > b2
     and a1 + a2 > b1 and a1 < b2),
    ("3", lambda a1, a2, b1, b2: -a1 + b2 > a2 - b1 and a1 < b1 and a2 > b2
     and a1 + a2 < b1),
    ("4", lambda a1, a2, b1, b2: -a1 + b2 > a2 - b1 and a1 < b1 and a2 < b2),
    ("5", lambda a1, a2, b1, b2: -a1 + b2 > a2 - b1 and a1 > b1),
    ("6", lambda a1, a2, b1, b2: -a1 + b2 < a2 - b1 and a2 > b1),
)


def _a2_generic_branch(a1, a2, b1, b2):
    _pos(a1, a2, b1, b2)
    for label, cond in _GENERIC_A2:
        if cond(a1, a2, b1, b2):
            return f"subcase {label}"
    raise DomainError("no listed generic subcase covers these values")


def _a2_generic(a1, a2, b1, b2):
    br = _a2_generic_branch(a1, a2, b1, b2)[-1]
    m = smin
    A = abs
    lists = {
        "1": [(a1 + b1, a2 + b2), (a1 + a2 - b1, -a2 + b1 + b2), (-a1 + b1, a1 + a2 + b2),
              (-a1 + b1 + b2, a1 + a2 - b2), (a1 + b1 + b2, a2 - b2),
              (-a1 - a2 + b1 + b2, a1 - b2)],
        "2": [(a1 + b1, a2 + b2), (a1 + a2 - b1, -a2 + b1 + b2), (-a1 + b1, a1 + a2 + b2),
              (-a1 + b1 + b2, a1 + a2 - b2),
              (A(a2 - b1), -a1 - a2 + b1 + b2 + m(0, a2 - b1)), (a1 + b1 + b2, a2 - b2)],
        "3": [(a1 + b1, a2 + b2), (-a1 + b1, a1 + a2 + b2), (-a1 - a2 + b1, a1 + b2),
              (-a1 + b1 + b2, a1 + a2 - b2), (a1 + b1 + b2, a2 - b2),
              (A(a1 + a2 - b1 - b2 + A(m(0, a1 - b2))), A(a1 - b2))],
        "4": [(a1 + b1, a2 + b2), (-a1 + b1, a1 + a2 + b2), (a1 + a2 + b1, -a2 + b2),
              (b1 + m(a2, -a1 + b2), A(a1 + a2 - b2)),
              (A(a1 + a2 - b1), b2 + m(a1, -a2 + b1)),
              (A(a1 + a2 - b1 - b2 + A(m(0, a1 - b2))),
               A(a1 + a2 - b1 - b2 + A(m(0, a2 - b1))))],
        "5": [(a1 + b1, a2 + b2), (a1 - b1, a2 + b1 + b2), (a1 + a2 - b1, -a2 + b1 + b2),
              (a1 + a2 + b1, -a2 + b2), (b1 + m(a2, -a1 + b2), A(a1 + a2 - b2)),
              (A(a1 + a2 - b1 - b2 + A(m(0, a1 - b2))),
               A(a1 + a2 - b1 - b2 + A(m(0, a2 - b1))))],
        "6": [(a1 + b1, a2 + b2), (A(a1 - b1), a2 + b2 + m(a1, b1)),
              (a1 + b1 + m(a2, b2), A(a2 - b2)), (A(-a1 + b1 + b2), a2 + m(b1, a1 - b2)),
              (a1 + m(a2 - b1, b2), A(-a2 + b1 + b2)),
              (A(-a1 + b2), A(-a1 - a2 + b1 + b2 + A(m(0, -a1 + b2))))],
    }
    # the six listed orbits are the six formula terms; boundary ones carry weight 2
    return [(xy, None) for xy in lists[br]]


def _a2_aa_a0(a):
    return [((2 * a, a), 1), ((0, 2 * a), 2), ((a, 0), 2)]


def _a2_aa_a0_printed(a):
    return [((2 * a, a), 1), ((0, 2 * a), 2), ((a, 0), 1)]


def _a2_ab_ba(a, b):
    m = smin(a, b)
    return [((a + b, a + b), 1), ((a, a), 1), ((b, b), 1),
            ((abs(a - b), a + b + m), 1), ((a + b + m, abs(a - b)), 1), ((0, 0), 6)]


# --- C2 ----------------------------------------------------------------------

def _c2_ab_ba(a, b):
    m = smin(a, b)
    return [((a + b, a + b), 1), ((a + b, a), 1), ((a + b, b), 1), ((abs(a - b), m), 1),
            ((abs(a - b), a + b + m), 1), ((a + b + 2 * m, abs(a - b)), 1),
            ((abs(a - b), 0), 2), ((a + b, 0), 2)]


def _c2_ab_ba_printed(a, b):
    m = smin(a, b)
    return _c2_ab_ba(a, b) + [((a + b + m, abs(a - b)), 1)]


# --- G2 ----------------------------------------------------------------------

def _g2_ab_ba_branch(a, b):
    _ab_distinct(a, b)
    if a == 2 * b or b == 2 * a:
        raise DomainError("a = 2b or b = 2a puts a listed orbit on a chamber wall")
    lo, hi = smin(a, b), max(a, b)
    return "max>2min" if hi > 2 * lo else "max<2min"


def _g2_ab_ba_printed(a, b):
    m = smin(a, b)
    return [((a + b, a + b), 1), ((a, a + 2 * b), 1), ((b, 2 * a + b), 1),
            ((abs(a - b), a + b + smin(3 * a, 3 * b)), 1),
            ((smin(a, 2 * b), abs(a - 2 * b)), 1), ((a + b + m, abs(a - b)), 1),
            ((m, abs(a - b)), 1), ((smin(2 * a, b), abs(b - 2 * a)), 1),
            ((0, 2 * a + 2 * b), 2), ((0, abs(a - b)), 2)]


def _g2_ab_ba(a, b):
    m = smin(a, b)
    return _g2_ab_ba_printed(a, b) + [((smin(m, abs(a - b)), abs(a + b - 3 * m)), 1),
                                      ((2 * m, 2 * abs(a - b)), 1)]


# --- H2 ----------------------------------------------------------------------

_T = TAU


def _h2_ab_ba(a, b):
    m, mx = smin(a, b), max(a, b)
    z = smin(abs(a - b * _T - a * _T), abs(b - a * _T - b * _T))
    w = (1 - _T) * (m - mx)
    return [((a + b, a + b), 1), ((b - a + a * _T, b - a + a * _T), 1),
            ((a - b + b * _T, a - b + b * _T), 1), ((abs(a - b), a + b + m * _T), 1),
            ((a + b + m * _T, abs(a - b)), 1), ((w, z), 1), ((z, w), 1),
            ((-b + b * _T, -b + b * _T), 1), ((-a + a * _T, -a + a * _T), 1), ((0, 0), 10)]


def _h2_ab_ab(a, b):
    z = Scalar(0)
    return [((2 * a, 2 * b), 1), ((b * _T, a * _T), 2), ((-a + a * _T, -b + b * _T), 2),
            ((0, 2 * b + a * _T), 2), ((2 * a + b * _T, 0), 2),
            ((0, -b + _T * (a + b)), 2), ((-a + _T * (a + b), 0), 2),
            ((max(z, a - b) * (_T - 1), max(z, b - a) * (_T - 1)), 2)]


def _fixed(*_):
    return "fixed"


CASES: dict[tuple[GroupId, str], SpecialCase] = {}


def _add(group: str, name: str, params: Sequence[str], factors, build, branch=None,
         printed=None, note: str = "") -> None:
    gid = GroupId(group)
    CASES[(gid, name)] = SpecialCase(gid, name, factors, build, tuple(params),
                                     branch or (lambda *p: _pos(*p) or "generic"),
                                     printed, note)


_add("A2", "00x00", (), lambda: ((0, 0), (0, 0)), lambda: [((0, 0), 1)], branch=_fixed)
_add("A2", "ab x 00", ("a", "b"), lambda a, b: ((a, b), (0, 0)), lambda a, b: [((a, b), 1)],
     branch=lambda a, b: (_pos(a, b) or "a,b>0"))
_add("A2", "a0 x b0", ("a", "b"), lambda a, b: ((a, 0), (b, 0)),
     lambda a, b: [((a + b, 0), 1), ((abs(a - b), smin(a, b)), 1)], branch=_ab_distinct)
_add("A2", "a0 x a0", ("a",), lambda a: ((a, 0), (a, 0)),
     lambda a: [((2 * a, 0), 1), ((0, a), 2)], branch=_a_only)
_add("A2", "a0 x 0b", ("a", "b"), lambda a, b: ((a, 0), (0, b)), _a2_a0_0b,
     branch=_a2_a0_0b_branch)
_add("A2", "ab x c0", ("a1", "a2", "b1"), lambda a1, a2, b1: ((a1, a2), (b1, 0)),
     _a2_ab_c0, branch=_a2_ab_c0_branch)
_add("A2", "ab x c0 compact", ("a1", "a2", "b1"), lambda a1, a2, b1: ((a1, a2), (b1, 0)),
     _a2_ab_c0_compact, branch=_a2_ab_c0_branch, printed=_a2_ab_c0_compact_printed,
     note="second term needs |.| on its y coordinate")
_add("A2", "ab x a0", ("a1", "a2"), lambda a1, a2: ((a1, a2), (a1, 0)), _a2_ab_a0,
     branch=_a2_ab_a0_branch, printed=_a2_ab_a0_printed,
     note="unexpanded first line omits 2O(0, a1+a2)")
_add("A2", "aa x a0", ("a",), lambda a: ((a, a), (a, 0)), _a2_aa_a0, branch=_a_only,
     printed=_a2_aa_a0_printed, note="O(a,0) must carry multiplicity 2")
_add("A2", "generic", ("a1", "a2", "b1", "b2"),
     lambda a1, a2, b1, b2: ((a1, a2), (b1, b2)), _a2_generic, branch=_a2_generic_branch)
_add("A2", "aa x aa", ("a",), lambda a: ((a, a), (a, a)),
     lambda a: [((2 * a, 2 * a), 1), ((0, 3 * a), 2), ((a, a), 2), ((3 * a, 0), 2),
                ((0, 0), 6)], branch=_a_only)
_add("A2", "ab x ba", ("a", "b"), lambda a, b: ((a, b), (b, a)), _a2_ab_ba,
     branch=_ab_distinct)

_add("C2", "aa x aa", ("a",), lambda a: ((a, a), (a, a)),
     lambda a: [((2 * a, 2 * a), 1), ((2 * a, a), 2), ((0, a), 2), ((0, 3 * a), 2),
                ((2 * a, 0), 2), ((4 * a, 0), 2), ((0, 0), 8)], branch=_a_only)
_add("C2", "ab x ab", ("a", "b"), lambda a, b: ((a, b), (a, b)),
     lambda a, b: [((2 * a, 2 * b), 1), ((0, a), 2), ((0, a + 2 * b), 2), ((2 * b, a), 2),
                   ((2 * a + 2 * b, 0), 2), ((2 * b, 0), 2), ((0, 0), 8)],
     branch=_ab_distinct)
_add("C2", "a0 x b0", ("a", "b"), lambda a, b: ((a, 0), (b, 0)),
     lambda a, b: [((a + b, 0), 1), ((abs(a - b), 0), 1), ((abs(a - b), smin(a, b)), 1)],
     branch=_ab_distinct)
_add("C2", "ab x ba", ("a", "b"), lambda a, b: ((a, b), (b, a)), _c2_ab_ba,
     branch=_ab_distinct, printed=_c2_ab_ba_printed,
     note="printed list repeats O(a+b+min, |a-b|); nine orbits overfill the product")

_add("G2", "aa x aa", ("a",), lambda a: ((a, a), (a, a)),
     lambda a: [((2 * a, 2 * a), 1), ((a, 3 * a), 2), ((a, a), 2), ((0, 5 * a), 2),
                ((0, 4 * a), 2), ((3 * a, 0), 2), ((2 * a, 0), 2), ((0, a), 2), ((a, 0), 2),
                ((0, 0), 12)], branch=_a_only)
_add("G2", "a0 x a0", ("a",), lambda a: ((a, 0), (a, 0)),
     lambda a: [((2 * a, 0), 1), ((a, 0), 2), ((0, 3 * a), 2), ((0, 0), 6)], branch=_a_only)
_add("G2", "ab x ab", ("a", "b"), lambda a, b: ((a, b), (a, b)),
     lambda a, b: [((2 * a, 2 * b), 1), ((0, b), 2), ((0, 3 * a + b), 2),
                   ((0, 3 * a + 2 * b), 2), ((a, 0), 2), ((a, b), 2), ((b, 3 * a), 2),
                   ((a + b, 0), 2), ((2 * a + b, 0), 2), ((0, 0), 12)],
     branch=_ab_distinct)
_add("G2", "ab x ba", ("a", "b"), lambda a, b: ((a, b), (b, a)), _g2_ab_ba,
     branch=_g2_ab_ba_branch, printed=_g2_ab_ba_printed,
     note="printed list misses O(min{a,b,|a-b|}, |a+b-3min|) and O(2min, 2|a-b|)")

_add("H2", "aa x aa", ("a",), lambda a: ((a, a), (a, a)),
     lambda a: [((2 * a, 2 * a), 1), ((a * _T, a * _T), 2), ((-a + a * _T, -a + a * _T), 2),
                ((0, -a + 2 * a * _T), 2), ((-a + 2 * a * _T, 0), 2),
                ((2 * a + a * _T, 0), 2), ((0, 2 * a + a * _T), 2), ((0, 0), 10)],
     branch=_a_only)
_add("H2", "a0 x 0a", ("a",), lambda a: ((a, 0), (0, a)),
     lambda a: [((a, a), 1), ((-a + a * _T, -a + a * _T), 1), ((0, 0), 5)], branch=_a_only)
_add("H2", "ab x ab", ("a", "b"), lambda a, b: ((a, b), (a, b)), _h2_ab_ab,
     branch=_ab_distinct)
_add("H2", "ab x ba", ("a", "b"), lambda a, b: ((a, b), (b, a)), _h2_ab_ba,
     branch=_ab_distinct)
_add("H2", "a0 x a0", ("a",), lambda a: ((a, 0), (a, 0)),
     lambda a: [((2 * a, 0), 1), ((0, a * _T), 2), ((-a + a * _T, 0), 2)], branch=_a_only)
_add("H2", "t0 x t0", (), lambda: ((_T, 0), (_T, 0)),
     lambda: [((2 * _T, 0), 1), ((0, 1 + _T), 2), ((1, 0), 2)], branch=_fixed)
_add("H2", "t0 x 1/t0", (), lambda: ((_T, 0), (_T - 1, 0)),
     lambda: [((1, 1), 1), ((2 * _T - 1, 0), 1), ((_T - 1, _T - 1), 1)], branch=_fixed)
_add("H2", "1/t0 x 1/t0", (), lambda: ((_T - 1, 0), (_T - 1, 0)),
     lambda: [((-2 + 2 * _T, 0), 1), ((2 - _T, 0), 2), ((0, 1), 2)], branch=_fixed)


def case_names(g: GroupId | str | None = None) -> list[tuple[GroupId, str]]:
    if g is None:
        return list(CASES)
    gid = GroupId.coerce(g)
    return [k for k in CASES if k[0] is gid]


def _lookup(g, pattern: str) -> SpecialCase:
    key = (GroupId.coerce(g), pattern)
    if key not in CASES:
        raise DomainError(f"no special case {pattern!r} for {key[0]}")
    return CASES[key]


def branch_of(g: GroupId | str, pattern: str, *params) -> str:
    case = _lookup(g, pattern)
    params = tuple(as_scalar(p) for p in params)
    if len(params) != len(case.params):
        raise DomainError(f"{pattern!r} takes {len(case.params)} parameters")
    return case.branch(*params)


def factors_of(g: GroupId | str, pattern: str, *params) -> tuple[Point, Point]:
    case = _lookup(g, pattern)
    params = tuple(as_scalar(p) for p in params)
    lam, mu = case.factors(*params)
    return Point(*lam), Point(*mu)


def _realise(g: GroupId, pairs: Pairs, lam: Point, mu: Point) -> Decomposition:
    order = group_data(g).order
    s = orbit_size(g, lam) * orbit_size(g, mu)
    terms = []
    for (x, y), k in pairs:
        d = to_dominant(g, Point(x, y))[0]
        mult = Fraction(s, order * orbit_size(g, d)) if k is None else Fraction(k)
        terms.append(Term(d, mult))
    return Decomposition.merge(g, terms, lam, mu, check=False)


def special_case(g: GroupId | str, pattern: str, *params, printed: bool = False
                 ) -> Decomposition:
    """Instantiate the named identity; ``printed=True`` gives the uncorrected form."""
    case = _lookup(g, pattern)
    branch_of(g, pattern, *params)  # validates side conditions
    params = tuple(as_scalar(p) for p in params)
    lam, mu = factors_of(g, pattern, *params)
    build = case.printed if (printed and case.printed is not None) else case.build
    return _realise(case.group, build(*params), lam, mu)
