"""Seeded Monte Carlo estimation with Clopper-Pearson error bars.

Randomness comes from the counter-based Philox 4x64 generator, keyed
directly with the 128-bit pair (seed, stream_id).  Identical keys replay
identical sample sequences on any platform, and distinct stream ids give
independent-in-practice streams, so replication r of an experiment simply
uses stream_id = r and the replications stay order-independent.

The estimators here are the package's demo of the conservatism results:
estimate a success probability from n Bernoulli trials (or a deterministic
predicate on sampled points), attach the exact interval, and compare the
empirical hit rate of many replications against the enumerated coverage.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .binomial import check_proportion, check_trial_count
from .coverage import exact_coverage
from .intervals import ConfidenceInterval, ConfidenceSpec, interval
from .stability import UncertainPolynomial, is_hurwitz_stable

_UINT64_CEILING = 2**64

# Bernoulli draws are made in blocks of this size to bound peak memory at
# the n = 10^7 API ceiling; splitting calls does not change the stream.
_SAMPLE_BLOCK = 1_000_000

TrialPredicate = Callable[[np.random.Generator], bool]


class TrialError(RuntimeError):
    """A trial predicate raised; carries the failing trial index."""

    def __init__(self, trial_index: int, cause: BaseException):
        super().__init__(f"trial {trial_index} failed: {cause}")
        self.trial_index = trial_index


@dataclass(frozen=True)
class SeededStream:
    """Deterministic random stream identified by (seed, stream_id).

    Backed by numpy's Philox 4x64 bit generator with the two ids as its
    128-bit key; the algorithm choice is frozen so pinned fixtures stay
    valid.
    """

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name, value in (("seed", self.seed), ("stream_id", self.stream_id)):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if not 0 <= int(value) < _UINT64_CEILING:
                raise ValueError(f"{name} must fit in an unsigned 64-bit integer, got {value}")

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed, self.stream_id], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class EstimationResult:
    """Success count from n trials with its interval and seed provenance."""

    n: int
    k: int
    p_hat: float
    interval: ConfidenceInterval
    delta: float
    stream: SeededStream


@dataclass(frozen=True)
class ReplicationReport:
    """Hit statistics of repeated interval constructions at a known p."""

    replications: int
    hits: int
    empirical_coverage: float
    exact_coverage_reference: float

    def __post_init__(self) -> None:
        if not 0 <= self.hits <= self.replications:
            raise ValueError(f"hits must lie in [0, {self.replications}], got {self.hits}")


def bernoulli_sample(stream: SeededStream, p: float, n: int) -> int:
    """Count of successes among n Bernoulli(p) draws from the stream."""
    p = check_proportion(p, name="p")
    n = check_trial_count(n)
    rng = stream.generator()
    successes = 0
    remaining = n
    while remaining > 0:
        block = min(remaining, _SAMPLE_BLOCK)
        successes += int((rng.random(block) < p).sum())
        remaining -= block
    return successes


@functools.lru_cache(maxsize=4096)
def _cached_interval(n: int, k: int, delta: float) -> ConfidenceInterval:
    return interval(ConfidenceSpec(n, k, delta))


def estimate_with_interval(
    stream: SeededStream,
    trial: Union[float, TrialPredicate],
    n: int,
    delta: float,
) -> EstimationResult:
    """Run n trials, count successes, attach the Clopper-Pearson interval.

    ``trial`` is either a success probability (Bernoulli trials) or a
    deterministic predicate called with the stream's generator once per
    trial.  Predicate failures are re-raised as TrialError with the
    failing trial index.
    """
    n = check_trial_count(n)
    if callable(trial):
        rng = stream.generator()
        k = 0
        for i in range(n):
            try:
                outcome = bool(trial(rng))
            except Exception as exc:
                raise TrialError(i, exc) from exc
            k += outcome
    else:
        k = bernoulli_sample(stream, float(trial), n)
    return EstimationResult(
        n=n,
        k=k,
        p_hat=k / n,
        interval=_cached_interval(n, k, delta),
        delta=float(delta),
        stream=stream,
    )


def empirical_coverage(
    p: float,
    n: int,
    delta: float,
    replications: int,
    seed: int,
) -> ReplicationReport:
    """Fraction of replications whose interval contains the true p.

    Replication r draws from SeededStream(seed, r); the report carries the
    enumerated exact coverage at (n, delta, p) for comparison.
    """
    p = check_proportion(p, name="p", open_interval=True)
    if replications < 1:
        raise ValueError(f"replications must be >= 1, got {replications}")
    hits = 0
    for r in range(replications):
        result = estimate_with_interval(SeededStream(seed, r), p, n, delta)
        hits += result.interval.contains(p)
    return ReplicationReport(
        replications=replications,
        hits=hits,
        empirical_coverage=hits / replications,
        exact_coverage_reference=exact_coverage(n, delta, p).coverage,
    )


def estimate_instability_probability(
    poly: UncertainPolynomial,
    n: int,
    delta: float,
    seed: int,
) -> EstimationResult:
    """Probability that a sampled member of the family is not Hurwitz stable.

    Coefficients are drawn uniformly and independently within their
    intervals; a trial succeeds when the sampled polynomial fails the
    strict stability test (marginal cases count as failures).
    """

    def unstable(rng: np.random.Generator) -> bool:
        return not is_hurwitz_stable(poly.sample(rng))

    return estimate_with_interval(SeededStream(seed, 0), unstable, n, delta)
