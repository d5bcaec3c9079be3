"""Formula-versus-oracle sweeps with invariant checks."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .decomposition import Decomposition
from .errors import DomainError, InconsistencyError
from .formulas import check_congruence, decompose_formula
from .groups import GroupId, Point
from .io import parse_point
from .oracle import decompose_oracle
from .scalar import Scalar, as_scalar, parse_scalar

__all__ = ["FormulaDeviation", "Comparison", "SweepReport", "compare", "grid_points",
           "sweep", "parse_grid"]


@dataclass(frozen=True)
class FormulaDeviation:
    """One disagreement between the engines, or an engine failure on a pair."""

    group: GroupId
    lam: Point
    mu: Point
    kind: str  # "mismatch" | "formula-error" | "oracle-error"
    detail: str

    def pretty(self) -> str:
        return (f"FORMULA-DEVIATION {self.group.value} {self.lam.pretty()} x {self.mu.pretty()}"
                f" [{self.kind}] {self.detail}")

    def to_json(self) -> dict:
        return {"group": self.group.value, "lambda": str(self.lam), "mu": str(self.mu),
                "kind": self.kind, "detail": self.detail}


@dataclass(frozen=True)
class Comparison:
    formula: Decomposition | None
    oracle: Decomposition | None
    deviation: FormulaDeviation | None

    @property
    def agree(self) -> bool:
        return self.deviation is None


def _diff_text(f: Decomposition, o: Decomposition) -> str:
    return "; ".join(f"{p.pretty()}: formula {a} oracle {b}" for p, a, b in f.diff(o))


def compare(g: GroupId | str, lam: Point, mu: Point) -> Comparison:
    g = GroupId.coerce(g)
    try:
        f = decompose_formula(g, lam, mu)
    except InconsistencyError as e:
        f, ferr = None, str(e)
    else:
        ferr = None
    try:
        o = decompose_oracle(g, lam, mu)
    except InconsistencyError as e:
        return Comparison(f, None, FormulaDeviation(g, lam, mu, "oracle-error", str(e)))
    if f is None:
        return Comparison(None, o, FormulaDeviation(g, lam, mu, "formula-error", ferr))
    if f != o:
        return Comparison(f, o, FormulaDeviation(g, lam, mu, "mismatch", _diff_text(f, o)))
    return Comparison(f, o, None)


def parse_grid(text: str) -> list[Scalar]:
    vals = [parse_scalar(s.strip()) for s in text.split(",") if s.strip()]
    if not vals:
        raise DomainError("grid is empty")
    return vals


def grid_points(grid: Iterable) -> list[Point]:
    vals = sorted({as_scalar(v) for v in grid})
    if not vals:
        raise DomainError("grid is empty")
    if vals[0] < 0:
        raise DomainError("grid values must be nonnegative")
    return [Point(x, y) for x, y in product(vals, repeat=2)]


@dataclass
class SweepReport:
    group: GroupId
    pairs: int = 0
    deviations: list[FormulaDeviation] = field(default_factory=list)
    conservation_failures: int = 0
    congruence_failures: int = 0
    commutativity_failures: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.deviations or self.conservation_failures
                    or self.congruence_failures or self.commutativity_failures)

    def summary(self) -> dict:
        return {
            "group": self.group.value,
            "pairs": self.pairs,
            "deviations": len(self.deviations),
            "conservation_failures": self.conservation_failures,
            "congruence_failures": self.congruence_failures,
            "commutativity_failures": self.commutativity_failures,
            "seconds": round(self.seconds, 3),
            "deviation_details": [d.to_json() for d in self.deviations],
        }


def _check_row(args: tuple[str, str, list[str]]) -> tuple[int, list[tuple], int, int, int]:
    """Worker: one lambda against many mu.  Strings in and out keep pickling trivial."""
    gname, lam_s, mus = args
    g = GroupId(gname)
    lam = parse_point(lam_s)
    devs, cons, cong, comm = [], 0, 0, 0
    for mu_s in mus:
        mu = parse_point(mu_s)
        c = compare(g, lam, mu)
        if c.deviation is not None:
            d = c.deviation
            devs.append((d.kind, d.detail, str(d.lam), str(d.mu)))
        if c.formula is None:
            continue
        cons += not c.formula.is_conserved()
        cong += not check_congruence(g, lam, mu, c.formula)
        try:
            comm += decompose_formula(g, mu, lam) != c.formula
        except InconsistencyError:
            comm += 1
    return len(mus), devs, cons, cong, comm


def sweep(g: GroupId | str, grid: Sequence, jobs: int = 1,
          pairs: Sequence[tuple[Point, Point]] | None = None) -> SweepReport:
    """Compare the engines on every dominant pair over ``grid`` (or on ``pairs``)."""
    g = GroupId.coerce(g)
    if pairs is None:
        pts = grid_points(grid)
        rows = [(g.value, str(lam), [str(mu) for mu in pts]) for lam in pts]
    else:
        by_lam: dict[Point, list[str]] = {}
        for lam, mu in pairs:
            by_lam.setdefault(lam, []).append(str(mu))
        rows = [(g.value, str(lam), mus) for lam, mus in by_lam.items()]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_row, rows))
    else:
        results = [_check_row(r) for r in rows]
    report = SweepReport(g)
    for n, devs, cons, cong, comm in results:
        report.pairs += n
        report.deviations.extend(FormulaDeviation(g, parse_point(lam), parse_point(mu), kind,
                                                  detail)
                                 for kind, detail, lam, mu in devs)
        report.conservation_failures += cons
        report.congruence_failures += cong
        report.commutativity_failures += comm
    report.seconds = time.perf_counter() - start
    return report
