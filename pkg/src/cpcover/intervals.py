"""Exact Clopper-Pearson confidence intervals for a binomial proportion.

For n trials with k observed successes and confidence parameter delta,
the two-sided interval [L, U] splits delta equally between the tails:

    L = 0             if k == 0, else the root of  P(X <= k-1; n, p) = 1 - delta/2
    U = 1             if k == n, else the root of  P(X <= k;   n, p) = delta/2

Each defining equation has a unique root in (0, 1) because the binomial
lower tail is strictly decreasing in p, so plain bisection on [0, 1] is
guaranteed to bracket it.  Bisection is deliberate: determinism across
platforms matters more here than iteration count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .binomial import binomial_tail, check_proportion, check_success_count, check_trial_count

# Bisection contract: absolute error in the root variable p is at most
# BISECTION_TOL.  The loop actually continues until the bracket can no
# longer be split in binary64 (roughly 1 ulp), which keeps symmetry and
# closed-form identities tight at the 1e-12 level downstream.
BISECTION_TOL = 1e-12
BISECTION_MAX_ITER = 200


@dataclass(frozen=True)
class ConfidenceSpec:
    """One interval-construction problem: n trials, k successes, parameter delta."""

    n: int
    k: int
    delta: float

    def __post_init__(self) -> None:
        check_trial_count(self.n)
        check_success_count(self.n, self.k)
        delta = float(self.delta)
        if not 0.0 < delta < 1.0:
            raise ValueError(f"delta must lie strictly inside (0, 1), got {self.delta}")
        object.__setattr__(self, "delta", delta)


@dataclass(frozen=True)
class ConfidenceInterval:
    """Closed interval [lower, upper]; lower < upper for every valid spec."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        check_proportion(self.lower, name="lower")
        check_proportion(self.upper, name="upper")
        if not self.lower < self.upper:
            raise ValueError(f"interval limits must satisfy lower < upper, got [{self.lower}, {self.upper}]")

    def contains(self, p: float, *, open_interval: bool = False) -> bool:
        if open_interval:
            return self.lower < p < self.upper
        return self.lower <= p <= self.upper


def _bisect_decreasing(f: Callable[[float], float], target: float) -> float:
    """Root of the strictly decreasing f on (0, 1) with f crossing target.

    Halves [0, 1] until the bracket is no longer splittable in binary64
    (at most BISECTION_MAX_ITER steps), well inside the BISECTION_TOL
    contract.
    """
    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lower_limit(spec: ConfidenceSpec) -> float:
    """Lower confidence limit; 0 when k == 0."""
    if spec.k == 0:
        return 0.0
    n, k = spec.n, spec.k
    return _bisect_decreasing(lambda p: binomial_tail(n, k - 1, p), 1.0 - spec.delta / 2.0)


def upper_limit(spec: ConfidenceSpec) -> float:
    """Upper confidence limit; 1 when k == n."""
    if spec.k == spec.n:
        return 1.0
    n, k = spec.n, spec.k
    return _bisect_decreasing(lambda p: binomial_tail(n, k, p), spec.delta / 2.0)


def interval(spec: ConfidenceSpec) -> ConfidenceInterval:
    """The two-sided interval [lower_limit, upper_limit] for the spec."""
    return ConfidenceInterval(lower_limit(spec), upper_limit(spec))


def all_intervals(n: int, delta: float) -> list[ConfidenceInterval]:
    """Intervals for every k = 0..n at fixed (n, delta), in k order.

    Plain loop over k with no shared state; the coverage module caches
    the result per (n, delta).
    """
    return [interval(ConfidenceSpec(n, k, delta)) for k in range(n + 1)]
