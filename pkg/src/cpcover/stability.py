"""Hurwitz stability of real polynomials via the Routh array.

The robustness demo treats "requirement violated" as the sampled system
polynomial failing strict Hurwitz stability (all roots in the open left
half plane).  Marginal cases are therefore counted as violations: a zero
first-column entry in the Routh array returns False immediately, with no
epsilon row substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


def is_hurwitz_stable(coefficients: Sequence[float]) -> bool:
    """True iff every root lies strictly in the open left half plane.

    ``coefficients`` are in descending power order, e.g. [1, 2, 1] is
    s^2 + 2s + 1.  Decision by the Routh array first-column sign test; a
    zero first-column entry (marginal or degenerate case) yields False.
    A constant nonzero polynomial has no roots and is vacuously stable.

    Raises ValueError for an empty or all-zero coefficient sequence and
    for a zero leading coefficient.
    """
    coeffs = [float(c) for c in coefficients]
    if not coeffs or all(c == 0.0 for c in coeffs):
        raise ValueError("polynomial must have at least one nonzero coefficient")
    if coeffs[0] == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    if coeffs[0] < 0.0:
        coeffs = [-c for c in coeffs]
    degree = len(coeffs) - 1
    if degree == 0:
        return True
    # Necessary condition: with a positive leading coefficient every
    # coefficient of a Hurwitz polynomial is positive.
    if any(c <= 0.0 for c in coeffs):
        return False

    width = (degree // 2) + 1
    prev = coeffs[0::2] + [0.0] * (width - len(coeffs[0::2]))
    curr = coeffs[1::2] + [0.0] * (width - len(coeffs[1::2]))
    for _ in range(degree - 1):
        pivot = curr[0]
        if pivot <= 0.0:
            # zero pivot: marginal/degenerate row, counted as not stable;
            # negative pivot: a first-column sign change.
            return False
        nxt = [0.0] * width
        for j in range(width - 1):
            nxt[j] = (pivot * prev[j + 1] - prev[0] * curr[j + 1]) / pivot
        prev, curr = curr, nxt
    return curr[0] > 0.0


@dataclass(frozen=True)
class UncertainPolynomial:
    """A monic-signed polynomial family with interval-bounded coefficients.

    ``coefficient_intervals[i]`` bounds the coefficient of s^i (ascending
    power order, degree+1 entries).  The leading coefficient's interval
    must be strictly positive so that every sampled member keeps the
    stated degree.  Members are drawn with each coefficient uniform and
    independent over its interval.
    """

    degree: int
    coefficient_intervals: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        intervals = tuple((float(lo), float(hi)) for lo, hi in self.coefficient_intervals)
        if len(intervals) != self.degree + 1:
            raise ValueError(
                f"need {self.degree + 1} coefficient intervals for degree {self.degree}, "
                f"got {len(intervals)}"
            )
        for i, (lo, hi) in enumerate(intervals):
            if not lo <= hi:
                raise ValueError(f"coefficient {i}: interval bounds must satisfy low <= high, got ({lo}, {hi})")
        if intervals[-1][0] <= 0.0:
            raise ValueError("leading coefficient interval must be strictly positive")
        object.__setattr__(self, "coefficient_intervals", intervals)

    def sample(self, rng: np.random.Generator) -> list[float]:
        """One member, as coefficients in descending power order.

        Draws degree+1 uniforms in ascending power order (one per
        coefficient), so the stream consumption is fixed and replays
        exactly for a replayed generator.
        """
        u = rng.random(self.degree + 1)
        ascending = [lo + (hi - lo) * ui for (lo, hi), ui in zip(self.coefficient_intervals, u)]
        return ascending[::-1]
