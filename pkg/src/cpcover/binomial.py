"""Numerically robust binomial probability mass and lower-tail sums.

Everything else in the package is built on the two functions here:
``binomial_pmf`` evaluates a single mass term C(n,k) x^k (1-x)^(n-k) and
``binomial_tail`` evaluates the lower-tail sum over j = 0..k.  Both work in
log space so that terms which would underflow as plain products survive,
and both short-circuit x = 0 and x = 1 before any logarithm is taken.

The tail uses two evaluation routes: compensated direct summation of the
log-space terms for small n (the transparent reference), and the
regularized incomplete beta identity

    sum_{j=0}^{k} C(n,j) x^j (1-x)^(n-j) = I_{1-x}(n-k, k+1)

for large n, where an O(n)-term sum would accumulate rounding loss.
"""

from __future__ import annotations

import functools
import math

import numpy as np
from scipy import special

# Hard ceiling on the trial count accepted at the API boundary.
MAX_TRIALS = 10_000_000

# Largest n evaluated by direct term summation; above this the incomplete
# beta identity takes over.
DIRECT_SUM_LIMIT = 64


def check_trial_count(n: int) -> int:
    """Validate a trial count: integer, >= 1, <= MAX_TRIALS."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"trial count must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise ValueError(f"trial count must be >= 1, got {n}")
    if n > MAX_TRIALS:
        raise ValueError(f"trial count {n} exceeds the supported ceiling {MAX_TRIALS}")
    return n


def check_success_count(n: int, k: int) -> int:
    """Validate a success count k against its trial count n (0 <= k <= n)."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise ValueError(f"success count must be an integer, got {k!r}")
    k = int(k)
    if k < 0:
        raise ValueError(f"success count must be >= 0, got {k}")
    if k > n:
        raise ValueError(f"success count {k} exceeds trial count {n}")
    return k


def check_proportion(x: float, *, name: str = "x", open_interval: bool = False) -> float:
    """Validate a proportion in [0, 1] (or strictly inside (0, 1))."""
    x = float(x)
    if math.isnan(x):
        raise ValueError(f"{name} must not be NaN")
    if open_interval:
        if not 0.0 < x < 1.0:
            raise ValueError(f"{name} must lie strictly inside (0, 1), got {x}")
    elif not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {x}")
    return x


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def binomial_pmf(n: int, k: int, x: float) -> float:
    """Probability of exactly k successes in n trials at success rate x.

    Computed as exp(log C(n,k) + k log x + (n-k) log(1-x)); the boundary
    values x = 0 and x = 1 return the analytically forced 0 or 1 without
    touching a logarithm.
    """
    n = check_trial_count(n)
    k = check_success_count(n, k)
    x = check_proportion(x)
    if x == 0.0:
        return 1.0 if k == 0 else 0.0
    if x == 1.0:
        return 1.0 if k == n else 0.0
    return math.exp(_log_binom(n, k) + k * math.log(x) + (n - k) * math.log1p(-x))


def binomial_tail(n: int, k: int, x: float) -> float:
    """Probability of at most k successes in n trials at success rate x.

    Strictly increasing in k for fixed x in (0,1) and strictly decreasing
    in x for fixed k <= n-1; the root finders in the interval module rely
    on the latter.  Returns exactly 1.0 when k == n.
    """
    n = check_trial_count(n)
    k = check_success_count(n, k)
    x = check_proportion(x)
    if k == n:
        return 1.0
    if x == 0.0:
        return 1.0
    if x == 1.0:
        return 0.0
    if n <= DIRECT_SUM_LIMIT:
        return _tail_by_summation(n, k, x)
    return _tail_by_beta(n, k, x)


def _tail_by_summation(n: int, k: int, x: float) -> float:
    """Neumaier-compensated sum of the log-space mass terms j = 0..k."""
    log_x = math.log(x)
    log_1mx = math.log1p(-x)
    total = 0.0
    comp = 0.0
    for j in range(k + 1):
        term = math.exp(_log_binom(n, j) + j * log_x + (n - j) * log_1mx)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return min(total + comp, 1.0)


def _tail_by_beta(n: int, k: int, x: float) -> float:
    """Tail via the regularized incomplete beta identity (k < n)."""
    return min(float(special.betainc(n - k, k + 1, 1.0 - x)), 1.0)


@functools.lru_cache(maxsize=256)
def _log_binom_row(n: int) -> np.ndarray:
    j = np.arange(n + 1, dtype=np.float64)
    row = special.gammaln(n + 1) - special.gammaln(j + 1) - special.gammaln(n - j + 1)
    row.setflags(write=False)
    return row


def pmf_row(n: int, x: float) -> np.ndarray:
    """All n+1 mass terms at once, for x strictly inside (0, 1).

    Same log-space formula as binomial_pmf, vectorized; the coverage
    sweeps use this to avoid n+1 scalar calls per grid point.
    """
    n = check_trial_count(n)
    x = check_proportion(x, open_interval=True)
    j = np.arange(n + 1, dtype=np.float64)
    log_terms = _log_binom_row(n) + j * math.log(x) + (n - j) * math.log1p(-x)
    return np.exp(log_terms)
