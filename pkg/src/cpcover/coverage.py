"""True coverage probability of the Clopper-Pearson interval.

The nominal confidence level is 1 - delta, but the realized coverage
Pr{L <= p <= U} at a fixed true proportion p is strictly larger (that is
the interval's conservatism).  This module computes the coverage exactly
by enumerating all n+1 intervals, classifies (n, delta, p) into
conservatism regimes, and evaluates the threshold

    bound(n, delta) = 1 - (delta/2)^(1/n)

that separates them: whenever p or 1-p falls below the bound, coverage is
at least 1 - delta/2, and when both do (i.e. (delta/2)^(1/n) < p <
1 - (delta/2)^(1/n)) the coverage is exactly 1.

Both the closed event {L <= p <= U} and the open event {L < p < U} are
supported; the closed event is the default.  Comparisons of p against
interval limits are exact binary64 comparisons, no fuzz factor: limits
are deterministic, and grid-based callers are expected to choose grids
that avoid exact ties with the limits.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .binomial import check_proportion, check_trial_count, pmf_row
from .intervals import all_intervals


class BoundaryMode(enum.Enum):
    """Whether coverage counts the closed event {L <= p <= U} or the open one."""

    CLOSED = "closed"
    OPEN = "open"


class Regime(enum.Enum):
    """Conservatism regime of (n, delta, p).

    COVERAGE_ONE: both p and 1-p are below the bound; every interval
    contains p and the coverage is exactly 1.
    AT_LEAST_ONE_MINUS_HALF_DELTA: exactly one of p, 1-p is below the
    bound; coverage is at least 1 - delta/2.
    CLUNIES_ROSS_ONLY: neither condition holds; only the baseline
    guarantee coverage > 1 - delta applies (closed event).
    """

    COVERAGE_ONE = "coverage_one"
    AT_LEAST_ONE_MINUS_HALF_DELTA = "at_least_one_minus_half_delta"
    CLUNIES_ROSS_ONLY = "clunies_ross_only"


@dataclass(frozen=True)
class CoveragePoint:
    p: float
    coverage: float
    boundary_mode: BoundaryMode

    def __post_init__(self) -> None:
        check_proportion(self.p, name="p", open_interval=True)
        check_proportion(self.coverage, name="coverage")


@dataclass(frozen=True)
class CoverageCurve:
    """Coverage evaluated over a strictly increasing p-grid inside (0, 1)."""

    n: int
    delta: float
    points: tuple[CoveragePoint, ...]

    def __post_init__(self) -> None:
        ps = [pt.p for pt in self.points]
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("grid p values must be strictly increasing")


@dataclass(frozen=True)
class ConservatismReport:
    n: int
    delta: float
    p: float
    bound: float
    regime: Regime


@functools.lru_cache(maxsize=512)
def interval_bounds(n: int, delta: float) -> tuple[np.ndarray, np.ndarray]:
    """Lower and upper limit arrays over k = 0..n, cached per (n, delta).

    Safe for concurrent readers: the arrays are computed once and frozen.
    """
    ivs = all_intervals(n, delta)
    lower = np.array([iv.lower for iv in ivs])
    upper = np.array([iv.upper for iv in ivs])
    lower.setflags(write=False)
    upper.setflags(write=False)
    return lower, upper


def exact_coverage(
    n: int,
    delta: float,
    p: float,
    boundary_mode: BoundaryMode = BoundaryMode.CLOSED,
) -> CoveragePoint:
    """Exact Pr{interval contains p} by enumeration over k = 0..n.

    Sums the binomial mass at p over every k whose interval contains p
    (closed or open containment per boundary_mode).
    """
    n = check_trial_count(n)
    p = check_proportion(p, name="p", open_interval=True)
    lower, upper = interval_bounds(n, delta)
    if boundary_mode is BoundaryMode.CLOSED:
        mask = (lower <= p) & (p <= upper)
    else:
        mask = (lower < p) & (p < upper)
    coverage = min(float(pmf_row(n, p)[mask].sum()), 1.0)
    return CoveragePoint(p=p, coverage=coverage, boundary_mode=boundary_mode)


def default_p_grid(points: int = 999) -> list[float]:
    """Equally spaced interior grid i/(points+1), i = 1..points."""
    if points < 1:
        raise ValueError("grid must contain at least one point")
    denom = points + 1
    return [i / denom for i in range(1, denom)]


def coverage_curve(
    n: int,
    delta: float,
    p_grid: Sequence[float] | None = None,
    boundary_mode: BoundaryMode = BoundaryMode.CLOSED,
) -> CoverageCurve:
    """exact_coverage swept over a grid, reusing one batch of intervals.

    The intervals are computed once per (n, delta) via the shared cache,
    so each grid point costs one pmf row and one mask.
    """
    if p_grid is None:
        p_grid = default_p_grid()
    grid = [check_proportion(p, name="p", open_interval=True) for p in p_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid p values must be strictly increasing")
    interval_bounds(n, delta)  # populate the cache before the sweep
    points = tuple(exact_coverage(n, delta, p, boundary_mode) for p in grid)
    return CoverageCurve(n=n, delta=delta, points=points)


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie strictly inside (0, 1), got {delta}")
    return delta


def conservatism_bound(n: int, delta: float) -> float:
    """The threshold 1 - (delta/2)^(1/n).

    Evaluated as -expm1(log(delta/2)/n) so the result keeps full relative
    accuracy even when it is tiny (large n).  Coincides with the upper
    confidence limit at k = 0.
    """
    n = check_trial_count(n)
    delta = _check_delta(delta)
    return -math.expm1(math.log(delta / 2.0) / n)


def _lower_threshold(n: int, delta: float) -> float:
    """(delta/2)^(1/n), the mirror threshold of conservatism_bound."""
    return math.exp(math.log(delta / 2.0) / n)


def classify_regime(n: int, delta: float, p: float) -> ConservatismReport:
    """Conservatism regime of (n, delta, p); see Regime for the meaning.

    The COVERAGE_ONE window uses strict inequalities on both sides.  At
    the exact threshold p == bound the classification falls back to
    AT_LEAST_ONE_MINUS_HALF_DELTA, although the one-sided certainties
    (which hold non-strictly at the threshold) still make the coverage 1
    there whenever the mirror condition also holds; use
    one_sided_certainty for that sharper, threshold-inclusive statement.
    """
    n = check_trial_count(n)
    delta = _check_delta(delta)
    p = check_proportion(p, name="p", open_interval=True)
    bound = conservatism_bound(n, delta)
    threshold = _lower_threshold(n, delta)
    if threshold < p < bound:
        regime = Regime.COVERAGE_ONE
    elif p < bound or (1.0 - p) < bound:
        regime = Regime.AT_LEAST_ONE_MINUS_HALF_DELTA
    else:
        regime = Regime.CLUNIES_ROSS_ONLY
    return ConservatismReport(n=n, delta=delta, p=p, bound=bound, regime=regime)


def one_sided_certainty(n: int, delta: float, p: float) -> tuple[bool, bool]:
    """(every lower limit <= p, p <= every upper limit), as threshold tests.

    The first holds iff p >= (delta/2)^(1/n) (the largest lower limit),
    the second iff p <= 1 - (delta/2)^(1/n) (the smallest upper limit);
    both are checkable independently by enumerating all n+1 intervals.
    """
    n = check_trial_count(n)
    delta = _check_delta(delta)
    p = check_proportion(p, name="p", open_interval=True)
    return p >= _lower_threshold(n, delta), p <= conservatism_bound(n, delta)


def bound_curve(delta: float, n_grid: Sequence[int]) -> list[tuple[int, float]]:
    """conservatism_bound evaluated pointwise over an increasing n grid."""
    grid = [check_trial_count(n) for n in n_grid]
    if not grid:
        raise ValueError("n grid must not be empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("n grid must be strictly increasing")
    delta = _check_delta(delta)
    return [(n, conservatism_bound(n, delta)) for n in grid]


def log_spaced_trial_grid(n_min: int, n_max: int, points: int) -> list[int]:
    """Strictly increasing integers, log-spaced between n_min and n_max."""
    n_min = check_trial_count(n_min)
    n_max = check_trial_count(n_max)
    if n_min > n_max:
        raise ValueError(f"need n_min <= n_max, got [{n_min}, {n_max}]")
    if points < 1:
        raise ValueError("grid must contain at least one point")
    if points == 1 or n_min == n_max:
        return [n_min]
    exponents = np.linspace(math.log10(n_min), math.log10(n_max), points)
    values = np.unique(np.rint(10.0**exponents).astype(int))
    values = values[(values >= n_min) & (values <= n_max)]
    return [int(v) for v in values]
