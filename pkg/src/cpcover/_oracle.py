"""Brute-force high-precision reference implementations, test-only.

Not part of the public API: the test suite uses these slow, transparent
evaluations to validate the production numerics at small n.  Tail sums
are exact rationals; interval limits and coverage are computed with
60-digit mpmath arithmetic (bisection carried far below binary64
resolution), and results are rounded to float only at the API edge.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb

import mpmath as mp

# Cost guard: everything here is O(n) big-number terms per evaluation.
MAX_ORACLE_TRIALS = 64

_DPS = 60
_BISECT_STEPS = 120  # bracket width 2^-120, far below binary64 ulp


def _check_guard(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_TRIALS:
        raise ValueError(f"oracle supports 1 <= n <= {MAX_ORACLE_TRIALS}, got {n}")


def oracle_tail(n: int, k: int, x: Fraction) -> Fraction:
    """Exact rational lower-tail sum, no rounding anywhere."""
    _check_guard(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"need 0 <= x <= 1, got {x}")
    one_minus = 1 - x
    return sum((comb(n, j) * x**j * one_minus ** (n - j) for j in range(k + 1)), Fraction(0))


def _mp_tail(n: int, k: int, x: "mp.mpf") -> "mp.mpf":
    """Lower-tail sum at working precision via the term recurrence."""
    q = 1 - x
    if x == 0:
        return mp.mpf(1)
    if q == 0:
        return mp.mpf(1) if k == n else mp.mpf(0)
    term = q**n
    total = term
    for j in range(k):
        term = term * (n - j) * x / ((j + 1) * q)
        total += term
    return total


def _mp_bisect_decreasing(f, target: "mp.mpf") -> "mp.mpf":
    lo, hi = mp.mpf(0), mp.mpf(1)
    for _ in range(_BISECT_STEPS):
        mid = (lo + hi) / 2
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@functools.lru_cache(maxsize=256)
def _interval_batch(n: int, delta: float) -> tuple:
    """All n+1 limit pairs for (n, delta) as extended-precision numbers."""
    _check_guard(n)
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie strictly inside (0, 1), got {delta}")
    with mp.workdps(_DPS):
        half = mp.mpf(delta) / 2
        limits = []
        for k in range(n + 1):
            if k == 0:
                lower = mp.mpf(0)
            else:
                lower = _mp_bisect_decreasing(lambda p, k=k: _mp_tail(n, k - 1, p), 1 - half)
            if k == n:
                upper = mp.mpf(1)
            else:
                upper = _mp_bisect_decreasing(lambda p, k=k: _mp_tail(n, k, p), half)
            limits.append((lower, upper))
    return tuple(limits)


def oracle_interval(n: int, k: int, delta: float) -> tuple[float, float]:
    """(lower, upper) limits from extended-precision bisection, as floats."""
    batch = _interval_batch(n, delta)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    lower, upper = batch[k]
    return float(lower), float(upper)


def oracle_coverage(n: int, delta: float, p: float, closed: bool = True) -> float:
    """Pr{interval contains p} by enumeration at extended precision.

    Containment is decided against the unrounded limits, so only p values
    astronomically close to a true limit are classification-sensitive.
    """
    _check_guard(n)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    batch = _interval_batch(n, delta)
    with mp.workdps(_DPS):
        x = mp.mpf(p)
        q = 1 - x
        total = mp.mpf(0)
        for k, (lower, upper) in enumerate(batch):
            covered = (lower <= x <= upper) if closed else (lower < x < upper)
            if covered:
                total += comb(n, k) * x**k * q ** (n - k)
        return float(total)
