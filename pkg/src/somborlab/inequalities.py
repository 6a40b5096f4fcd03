"""Grid checks for the scalar inequalities behind the extremal results.

Every check here is evidence, not proof: a claimed inequality is evaluated
on a dense grid and violations are recorded.  Monotonicity claims are tested
through forward differences with the grid step as delta — the honest
computational analogue of the plotted-derivative arguments they replace.

Checkable claims (each quantity is arranged so the claim is ``value >= 0``):

* ``L1``    (1 + (x-1+y)^2)^a - (x^2 + y^2)^a >= 0        for x, y >= 1, a > 0
* ``L5``    f(x) = (x^2+9)^a - (x^2+4)^a decreasing        for x > 0, 0 < a < 1
* ``L6``    f1, f2 increasing (value = min of both diffs)  for x >= 1, 0 < a < 1
* ``L7``    f increasing                                   for x >= 3, 0 < a < 1
* ``gpos``  g(x) > 0                                       for x >= 1, 0 < a < 1
* ``hpos``  h(x) > 0                                       for x >= 3, 0 < a < 1

with f1(x) = (x-1)((x+1)^2+1)^a + 2((x+1)^2+4)^a - (x-1)(x^2+1)^a - (x^2+4)^a,
f2 the same with trailing term (x^2+9)^a, the L7 f(x) = (x-2)(x^2+1)^a
+ 2(x^2+4)^a - 2((x-1)^2+4)^a - (x-3)((x-1)^2+1)^a, and g, h the slope
lower bounds of L6 and L7 (all four power exponents in h are a - 1).

A strict claim counts as violated only when the value is below -1e-12;
values within +-1e-12 are flagged ``boundary`` (L1 hits exact equality on
its x = 1 and y = 1 edges).

The module also carries the catalog of fixed sign constants, expressions of
the form sum(c * b^a) claimed negative on a stated alpha range, plus a
bisection locator for the one catalog entry with a documented sign change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadGrid, UnknownConstant

STRICT_EPS = 1e-12


@dataclass(frozen=True)
class GridSpec:
    """Closed arithmetic grid start, start+step, ..., up to stop inclusive."""

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.step <= 0 or self.stop < self.start:
            raise BadGrid(f"bad grid [{self.start}, {self.stop}] step {self.step}")

    def points(self) -> list[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]


# -- lemma quantities ---------------------------------------------------------------


def _l1_margin(a: float, x: float, y: float) -> float:
    return (1.0 + (x - 1.0 + y) ** 2) ** a - (x * x + y * y) ** a


def _f5(x: float, a: float) -> float:
    return (x * x + 9.0) ** a - (x * x + 4.0) ** a


def _f1(x: float, a: float) -> float:
    xs = (x + 1.0) ** 2
    return ((x - 1.0) * (xs + 1.0) ** a + 2.0 * (xs + 4.0) ** a
            - (x - 1.0) * (x * x + 1.0) ** a - (x * x + 4.0) ** a)


def _f2(x: float, a: float) -> float:
    xs = (x + 1.0) ** 2
    return ((x - 1.0) * (xs + 1.0) ** a + 2.0 * (xs + 4.0) ** a
            - (x - 1.0) * (x * x + 1.0) ** a - (x * x + 9.0) ** a)


def _f7(x: float, a: float) -> float:
    ys = (x - 1.0) ** 2
    return ((x - 2.0) * (x * x + 1.0) ** a + 2.0 * (x * x + 4.0) ** a
            - 2.0 * (ys + 4.0) ** a - (x - 3.0) * (ys + 1.0) ** a)


def g_slope_bound(x: float, a: float) -> float:
    """Lower-bound integrand for the L6 slopes; claimed positive for x >= 1."""
    return ((x - 1.0) * (x + 1.0) * (x * x + 2.0 * x + 2.0) ** (a - 1.0)
            + 2.0 * (x + 1.0) * (x * x + 2.0 * x + 5.0) ** (a - 1.0)
            - x * (x - 1.0) * (x * x + 1.0) ** (a - 1.0)
            - x * (x * x + 4.0) ** (a - 1.0))


def h_slope_bound(x: float, a: float) -> float:
    """Lower-bound integrand for the L7 slope; claimed positive for x >= 3."""
    ys = (x - 1.0) ** 2
    return ((x - 2.0) * x * (x * x + 1.0) ** (a - 1.0)
            + 2.0 * x * (x * x + 4.0) ** (a - 1.0)
            - (x - 3.0) * (x - 1.0) * (ys + 1.0) ** (a - 1.0)
            - 2.0 * (x - 1.0) * (ys + 4.0) ** (a - 1.0))


@dataclass(frozen=True)
class _LemmaDef:
    x_min: float
    x_open: bool          # domain excludes x_min itself
    alpha_grid: GridSpec
    x_grid: GridSpec
    forward_diff: bool    # claim is about f(x + step) vs f(x)


_ALPHA_OPEN_UNIT = GridSpec(0.02, 0.98, 0.02)

_LEMMAS: dict[str, _LemmaDef] = {
    "L1": _LemmaDef(1.0, False, GridSpec(0.1, 2.0, 0.1), GridSpec(1.0, 50.0, 0.5), False),
    "L5": _LemmaDef(0.0, True, _ALPHA_OPEN_UNIT, GridSpec(0.1, 50.0, 0.1), True),
    "L6": _LemmaDef(1.0, False, _ALPHA_OPEN_UNIT, GridSpec(1.0, 50.0, 0.1), True),
    "L7": _LemmaDef(3.0, False, _ALPHA_OPEN_UNIT, GridSpec(3.0, 50.0, 0.1), True),
    "gpos": _LemmaDef(1.0, False, _ALPHA_OPEN_UNIT, GridSpec(1.0, 50.0, 0.1), False),
    "hpos": _LemmaDef(3.0, False, _ALPHA_OPEN_UNIT, GridSpec(3.0, 50.0, 0.1), False),
}

LEMMA_IDS = tuple(_LEMMAS)


def _lemma_value(lemma_id: str, a: float, x: float, delta: float) -> float:
    if lemma_id == "L5":
        return _f5(x, a) - _f5(x + delta, a)
    if lemma_id == "L6":
        return min(_f1(x + delta, a) - _f1(x, a), _f2(x + delta, a) - _f2(x, a))
    if lemma_id == "L7":
        return _f7(x + delta, a) - _f7(x, a)
    if lemma_id == "gpos":
        return g_slope_bound(x, a)
    if lemma_id == "hpos":
        return h_slope_bound(x, a)
    raise UnknownConstant(f"no lemma {lemma_id!r}")


@dataclass
class LemmaReport:
    """Outcome of one grid check; rows feed the CSV and figure writers.

    ``rows`` holds (alpha, x, value, status) per grid point — for the 2-D L1
    grid the y axis is folded to its worst margin per (alpha, x), while
    ``violations`` keeps exact coordinates.  Grid evidence only: a clean
    report certifies the grid, not the continuum claim.
    """

    lemma_id: str
    alpha_grid: GridSpec
    x_grid: GridSpec
    y_grid: GridSpec | None
    rows: list[tuple[float, float, float, str]] = field(default_factory=list)
    violations: list[tuple] = field(default_factory=list)
    min_margin: float = math.inf
    boundary_count: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def _classify(self, value: float) -> str:
        if value < -STRICT_EPS:
            return "violation"
        if abs(value) <= STRICT_EPS:
            return "boundary"
        return "ok"

    def _record(self, alpha: float, x: float, value: float, where: tuple) -> str:
        status = self._classify(value)
        if status == "violation":
            self.violations.append(where + (value,))
        elif status == "boundary":
            self.boundary_count += 1
        if abs(value) < abs(self.min_margin):
            self.min_margin = value
        return status


def check_lemma(
    lemma_id: str,
    alpha_grid: GridSpec | None = None,
    x_grid: GridSpec | None = None,
    y_grid: GridSpec | None = None,
) -> LemmaReport:
    """Evaluate one lemma's claim over a grid; defaults per the catalog above."""
    if lemma_id not in _LEMMAS:
        raise UnknownConstant(f"no lemma {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")
    spec = _LEMMAS[lemma_id]
    alpha_grid = alpha_grid or spec.alpha_grid
    x_grid = x_grid or spec.x_grid
    if lemma_id != "L1" and y_grid is not None:
        raise BadGrid(f"{lemma_id} takes no y grid")
    lo = alpha_grid.start
    if lo <= 0:
        raise BadGrid(f"alpha grid must stay positive, starts at {lo}")
    if lemma_id != "L1" and alpha_grid.stop >= 1:
        raise BadGrid(f"{lemma_id} needs alpha < 1, grid reaches {alpha_grid.stop}")
    if x_grid.start < spec.x_min or (spec.x_open and x_grid.start <= spec.x_min):
        cmp = "> " if spec.x_open else ">= "
        raise BadGrid(f"{lemma_id} needs x {cmp}{spec.x_min}, grid starts at {x_grid.start}")

    report = LemmaReport(lemma_id, alpha_grid, x_grid, y_grid if lemma_id == "L1" else None)
    xs = x_grid.points()
    if lemma_id == "L1":
        y_grid = y_grid or spec.x_grid
        if y_grid.start < 1.0:
            raise BadGrid(f"L1 needs y >= 1, grid starts at {y_grid.start}")
        report.y_grid = y_grid
        ys = y_grid.points()
        for a in alpha_grid.points():
            for x in xs:
                worst = math.inf
                worst_y = ys[0]
                for y in ys:
                    val = _l1_margin(a, x, y)
                    report._record(a, x, val, (a, x, y))
                    if val < worst:
                        worst, worst_y = val, y
                report.rows.append((a, x, worst, report._classify(worst)))
        return report

    delta = x_grid.step
    for a in alpha_grid.points():
        for x in xs:
            val = _lemma_value(lemma_id, a, x, delta)
            status = report._record(a, x, val, (a, x))
            report.rows.append((a, x, val, status))
    return report


# -- sign-constant catalog ----------------------------------------------------------


@dataclass(frozen=True)
class ProofConstant:
    """Expression sum(c * b^a) claimed strictly negative on (0, alpha_max)."""

    id: str
    terms: tuple[tuple[int, int], ...]
    alpha_max: float = 1.0
    stated_root: float | None = None

    def value(self, a: float) -> float:
        return sum(c * float(b) ** a for c, b in self.terms)

    @property
    def expression(self) -> str:
        parts = []
        for c, b in self.terms:
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{b}^a" if parts else f"{sign}{mag}{b}^a")
        return " ".join(parts)


_CATALOG: dict[str, ProofConstant] = {
    c.id: c
    for c in (
        ProofConstant("subcase22", ((1, 8), (-1, 13), (1, 20), (-1, 17)),
                      alpha_max=1.9, stated_root=1.90056),
        ProofConstant("lemma3odd", ((5, 8), (-2, 13), (-1, 18), (-2, 10))),
        ProofConstant("prop2case2", ((1, 10), (-1, 5), (2, 13), (2, 8), (-3, 20), (-1, 17))),
        ProofConstant("thm1case1", ((2, 8), (-1, 10), (-1, 18))),
        ProofConstant("thm1claim2a", ((1, 18), (-1, 13), (1, 5), (-1, 10))),
        ProofConstant("thm1claim2b", ((1, 18), (1, 8), (-2, 13))),
        ProofConstant("claim3case1", ((1, 13), (-1, 18), (1, 8), (-1, 10))),
        ProofConstant("claim3case2", ((2, 8), (-2, 10))),
        ProofConstant("claim4case1", ((1, 18), (-1, 20))),
        ProofConstant("claim4case2", ((2, 10), (-2, 17), (2, 13), (-2, 20), (1, 10), (-1, 5))),
    )
}

CONSTANT_IDS = tuple(sorted(_CATALOG))


def get_constant(constant_id: str) -> ProofConstant:
    try:
        return _CATALOG[constant_id]
    except KeyError:
        raise UnknownConstant(
            f"no constant {constant_id!r}; known: {', '.join(CONSTANT_IDS)}"
        ) from None


@dataclass
class ConstantReport:
    constant_id: str
    alpha_max: float
    step: float
    violations: list[tuple[float, float]] = field(default_factory=list)
    max_value: float = -math.inf
    max_at: float = math.nan
    root_estimate: float | None = None

    @property
    def passed(self) -> bool:
        return not self.violations


def check_constant(
    constant_id: str, alpha_max: float | None = None, step: float = 1e-3
) -> ConstantReport:
    """Scan c(a) < 0 on the open grid (0, alpha_max); bisect the stated root."""
    const = get_constant(constant_id)
    if alpha_max is None:
        alpha_max = const.alpha_max
    if alpha_max <= 0 or alpha_max > const.alpha_max + 1e-9:
        raise BadGrid(
            f"{constant_id} is only claimed negative up to {const.alpha_max}, "
            f"requested {alpha_max}"
        )
    if step <= 0:
        raise BadGrid(f"alpha step must be positive, got {step}")
    report = ConstantReport(constant_id, alpha_max, step)
    k = 1
    while (a := k * step) < alpha_max - 1e-12:
        val = const.value(a)
        if val > STRICT_EPS:
            report.violations.append((a, val))
        if val > report.max_value:
            report.max_value = val
            report.max_at = a
        k += 1
    if const.stated_root is not None:
        report.root_estimate = _bisect_root(const, const.stated_root)
    return report


def _bisect_root(const: ProofConstant, near: float, tol: float = 1e-6) -> float:
    lo, hi = near - 0.5, near + 0.5
    flo = const.value(lo)
    if flo * const.value(hi) > 0:
        raise BadGrid(f"no sign change of {const.id} in ({lo}, {hi})")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if flo * const.value(mid) <= 0:
            hi = mid
        else:
            lo = mid
            flo = const.value(lo)
    return 0.5 * (lo + hi)
