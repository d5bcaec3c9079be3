"""Terms and decompositions shared by the closed-form and brute-force engines."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, InconsistencyError
from .groups import GroupId, Point, congruence, congruence_modulus, is_dominant, orbit_size


@dataclass(frozen=True, order=True)
class Term:
    dominant: Point
    multiplicity: Fraction

    def __post_init__(self) -> None:
        if not is_dominant(self.dominant):
            raise DomainError(f"term dominant {self.dominant!r} is not dominant")
        object.__setattr__(self, "multiplicity", Fraction(self.multiplicity))
        if self.multiplicity < 0:
            raise DomainError("negative multiplicity")

    def pretty(self) -> str:
        m = self.multiplicity
        prefix = "" if m == 1 else f"{m}"
        return f"{prefix}O{self.dominant.pretty()}"


@dataclass(frozen=True)
class Decomposition:
    """A canonical union of orbits: distinct dominants, sorted, positive multiplicities.

    Equality looks at ``group`` and ``terms`` only; ``lam``/``mu`` record the factors
    when known and drive the size-conservation check.
    """

    group: GroupId
    terms: tuple[Term, ...]
    lam: Point | None = field(default=None, compare=False)
    mu: Point | None = field(default=None, compare=False)

    @classmethod
    def merge(cls, group: GroupId | str, terms: Iterable[Term], lam: Point | None = None,
              mu: Point | None = None, check: bool = True) -> Decomposition:
        group = GroupId.coerce(group)
        acc: dict[Point, Fraction] = defaultdict(Fraction)
        for t in terms:
            acc[t.dominant] += t.multiplicity
        merged = tuple(Term(p, m) for p, m in sorted(acc.items()) if m != 0)
        d = cls(group, merged, lam, mu)
        if check and lam is not None and mu is not None:
            d.assert_conserved()
        return d

    @classmethod
    def from_pairs(cls, group: GroupId | str, pairs, lam=None, mu=None) -> Decomposition:
        """Build from ``[(Point, multiplicity), ...]``; handy for literal expectations."""
        return cls.merge(group, (Term(p, Fraction(m)) for p, m in pairs), lam, mu)

    def total_size(self) -> Fraction:
        return sum((t.multiplicity * orbit_size(self.group, t.dominant) for t in self.terms),
                   Fraction(0))

    def expected_size(self) -> int | None:
        if self.lam is None or self.mu is None:
            return None
        return orbit_size(self.group, self.lam) * orbit_size(self.group, self.mu)

    def is_conserved(self) -> bool:
        exp = self.expected_size()
        return exp is None or self.total_size() == exp

    def assert_conserved(self) -> None:
        if not self.is_conserved():
            raise InconsistencyError(
                f"size not conserved for {self.group} {self.lam}x{self.mu}: "
                f"{self.total_size()} != {self.expected_size()}"
            )

    def has_integer_multiplicities(self) -> bool:
        return all(t.multiplicity.denominator == 1 for t in self.terms)

    def as_dict(self) -> dict[Point, Fraction]:
        return {t.dominant: t.multiplicity for t in self.terms}

    def scaled(self, factor) -> Decomposition:
        f = Fraction(factor)
        return Decomposition(self.group, tuple(Term(t.dominant, t.multiplicity * f)
                                               for t in self.terms if f != 0), self.lam, self.mu)

    def congruence_class(self) -> int | None:
        """Class shared by the factors' sum, when the group and coordinates allow one."""
        if self.lam is None or self.mu is None:
            return None
        try:
            a, b = congruence(self.group, self.lam), congruence(self.group, self.mu)
        except DomainError:
            return None
        if a is None or b is None:
            return None
        return (a + b) % congruence_modulus(self.group)

    def diff(self, other: Decomposition) -> list[tuple[Point, Fraction, Fraction]]:
        """Dominants whose multiplicities differ: ``(point, mine, theirs)``."""
        mine, theirs = self.as_dict(), other.as_dict()
        out = []
        for p in sorted(set(mine) | set(theirs)):
            a, b = mine.get(p, Fraction(0)), theirs.get(p, Fraction(0))
            if a != b:
                out.append((p, a, b))
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def pretty(self) -> str:
        return " ∪ ".join(t.pretty() for t in self.terms) or "∅"
