"""One-sided limits of orbits and orbit products as coordinates approach boundary values.

Along a path the orbit keeps its generic size; at the limit point it may collapse onto a
smaller orbit, which then absorbs the surplus as multiplicity.  Term coordinates of the
closed formulas are continuous, so a product limit is obtained by substitution with the
generic sizes carried along.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .decomposition import Decomposition, Term
from .errors import DomainError
from .formulas import raw_dominants, raw_terms
from .groups import GroupId, Point, group_data, orbit_size
from .scalar import Scalar, as_scalar

__all__ = ["LimitSpec", "ContinuityReport", "generic_size", "orbit_limit", "product_limit",
           "continuity_check", "path_point"]

_WHICH = ("x", "y", "both")


@dataclass(frozen=True)
class LimitSpec:
    """``which`` coordinate(s) tend to the matching entries of ``target``.

    The other coordinate is frozen at its ``target`` value.  Coordinates tending to 0
    approach from above.
    """

    which: str
    target: Point

    def __post_init__(self) -> None:
        if self.which not in _WHICH:
            raise DomainError(f"which must be one of {_WHICH}, got {self.which!r}")
        if not isinstance(self.target, Point):
            object.__setattr__(self, "target", Point(*self.target))
        if self.target.x < 0 or self.target.y < 0:
            raise DomainError("limit targets must be nonnegative")

    def moving(self) -> tuple[bool, bool]:
        return self.which in ("x", "both"), self.which in ("y", "both")


Path = Union[LimitSpec, Point]


def _as_spec(path: Path) -> LimitSpec | None:
    return path if isinstance(path, LimitSpec) else None


def _endpoint(path: Path) -> Point:
    return path.target if isinstance(path, LimitSpec) else path


def generic_size(g: GroupId | str, path: Path) -> int:
    """Orbit size just before the limit is reached."""
    g = GroupId.coerce(g)
    spec = _as_spec(path)
    if spec is None:
        return orbit_size(g, path)
    order = group_data(g).order
    mx, my = spec.moving()
    x_pos = mx or spec.target.x > 0
    y_pos = my or spec.target.y > 0
    if x_pos and y_pos:
        return order
    if x_pos or y_pos:
        return order // 2
    return 1


def orbit_limit(g: GroupId | str, spec: LimitSpec) -> Term:
    """``lim O(path) = (generic size / |O(target)|) O(target)``."""
    g = GroupId.coerce(g)
    return Term(spec.target, Fraction(generic_size(g, spec), orbit_size(g, spec.target)))


def product_limit(g: GroupId | str, lam: Path, mu: Path) -> Decomposition:
    """Termwise limit of the closed formula; either factor may be a fixed Point."""
    g = GroupId.coerce(g)
    lam0, mu0 = _endpoint(lam), _endpoint(mu)
    sizes = (generic_size(g, lam), generic_size(g, mu))
    terms = raw_terms(g, lam0, mu0, sizes=sizes)
    d = Decomposition.merge(g, terms, lam0, mu0, check=False)
    expected = sizes[0] * sizes[1]
    if d.total_size() != expected:
        raise DomainError(f"limit lost mass: {d.total_size()} != {expected}")
    return d


def path_point(path: Path, eps) -> Point:
    """The point at parameter ``eps`` along the path (approach from above)."""
    spec = _as_spec(path)
    if spec is None:
        return path
    e = as_scalar(eps)
    mx, my = spec.moving()
    t = spec.target
    return Point(t.x + e if mx else t.x, t.y + e if my else t.y)


@dataclass(frozen=True)
class ContinuityReport:
    eps: tuple[Scalar, ...]
    # max |coordinate difference| between index-matched formula terms and the limit terms
    deviations: tuple[Scalar, ...]
    # terms whose multiplicity, rescaled onto the limit orbit, disagrees with the limit
    multiplicity_mismatches: tuple[int, ...]
    limit: Decomposition

    @property
    def max_deviation(self) -> Scalar:
        return self.deviations[-1]

    @property
    def monotone(self) -> bool:
        d = self.deviations
        return all(d[i + 1] <= d[i] for i in range(len(d) - 1))

    @property
    def stable(self) -> bool:
        return not any(self.multiplicity_mismatches)

    @property
    def converges(self) -> bool:
        """Monotone, stable, and deviation bounded by a fixed multiple of eps."""
        if not (self.monotone and self.stable):
            return False
        e0, d0 = self.eps[0], self.deviations[0]
        return all(d * e0 <= d0 * e for d, e in zip(self.deviations, self.eps))

    def summary(self) -> dict:
        return {
            "eps": [str(e) for e in self.eps],
            "deviations": [str(d) for d in self.deviations],
            "multiplicity_mismatches": list(self.multiplicity_mismatches),
            "monotone": self.monotone,
            "stable": self.stable,
            "converges": self.converges,
        }


def continuity_check(g: GroupId | str, lam: Path, mu: Path, eps: Sequence) -> ContinuityReport:
    """Sample the closed formula along the path and compare with :func:`product_limit`."""
    g = GroupId.coerce(g)
    eps = tuple(as_scalar(e) for e in eps)
    if not eps or any(e <= 0 for e in eps):
        raise DomainError("eps samples must be positive")
    if any(eps[i + 1] >= eps[i] for i in range(len(eps) - 1)):
        raise DomainError("eps samples must be strictly decreasing")
    lam0, mu0 = _endpoint(lam), _endpoint(mu)
    limit = product_limit(g, lam, mu)
    limit_doms = raw_dominants(g, lam0, mu0)
    sizes = (generic_size(g, lam), generic_size(g, mu))
    limit_mults = [t.multiplicity for t in raw_terms(g, lam0, mu0, sizes=sizes)]
    devs, mism = [], []
    for e in eps:
        lp, mp = path_point(lam, e), path_point(mu, e)
        doms = raw_dominants(g, lp, mp)
        terms = raw_terms(g, lp, mp)
        dev = Scalar(0)
        bad = 0
        for d_lim, d, t, m_lim in zip(limit_doms, doms, terms, limit_mults):
            dev = max(dev, abs(d.x - d_lim.x), abs(d.y - d_lim.y))
            carried = t.multiplicity * orbit_size(g, d) / orbit_size(g, d_lim)
            bad += carried != m_lim
        devs.append(dev)
        mism.append(bad)
    return ContinuityReport(eps, tuple(devs), tuple(mism), limit)
