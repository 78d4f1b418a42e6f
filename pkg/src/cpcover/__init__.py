"""Exact Clopper-Pearson intervals, their true coverage, and conservatism.

The interval with nominal confidence 1 - delta is conservative: the true
coverage probability Pr{L <= p <= U} always exceeds 1 - delta, reaches at
least 1 - delta/2 once p or 1 - p drops below 1 - (delta/2)^(1/n), and is
exactly 1 inside the window ((delta/2)^(1/n), 1 - (delta/2)^(1/n)).  This
package constructs the intervals, computes the coverage exactly by
enumeration, evaluates the bound, and ships a seeded Monte Carlo harness
(including a polynomial-stability robustness demo) that exhibits the
conservatism empirically.
"""

from .binomial import binomial_pmf, binomial_tail, pmf_row
from .coverage import (
    BoundaryMode,
    ConservatismReport,
    CoverageCurve,
    CoveragePoint,
    Regime,
    bound_curve,
    classify_regime,
    conservatism_bound,
    coverage_curve,
    default_p_grid,
    exact_coverage,
    interval_bounds,
    log_spaced_trial_grid,
    one_sided_certainty,
)
from .intervals import (
    ConfidenceInterval,
    ConfidenceSpec,
    all_intervals,
    interval,
    lower_limit,
    upper_limit,
)
from .montecarlo import (
    EstimationResult,
    ReplicationReport,
    SeededStream,
    TrialError,
    bernoulli_sample,
    empirical_coverage,
    estimate_instability_probability,
    estimate_with_interval,
)
from .stability import UncertainPolynomial, is_hurwitz_stable

__version__ = "0.1.0"

__all__ = [
    "BoundaryMode",
    "ConfidenceInterval",
    "ConfidenceSpec",
    "ConservatismReport",
    "CoverageCurve",
    "CoveragePoint",
    "EstimationResult",
    "Regime",
    "ReplicationReport",
    "SeededStream",
    "TrialError",
    "UncertainPolynomial",
    "all_intervals",
    "bernoulli_sample",
    "binomial_pmf",
    "binomial_tail",
    "bound_curve",
    "classify_regime",
    "conservatism_bound",
    "coverage_curve",
    "default_p_grid",
    "empirical_coverage",
    "estimate_instability_probability",
    "estimate_with_interval",
    "exact_coverage",
    "interval",
    "interval_bounds",
    "is_hurwitz_stable",
    "log_spaced_trial_grid",
    "lower_limit",
    "one_sided_certainty",
    "pmf_row",
    "upper_limit",
]
