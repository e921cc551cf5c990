"""Markov-property check for a noisy count series.

A series is accepted as Markovian when its first differences look like white
Gaussian noise: under the additive-noise model each observation is the
previous one plus an independent N(0, sigma^2) draw, so the differences are
an i.i.d. normal sample and the Shapiro-Wilk test applies.  The verdict is
therefore always relative to that model -- an accepted series is "Markov with
respect to additive Gaussian noise", not Markov in any wider sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import DegenerateSeriesError, TimeSeries, difference
from .swilk import RULE_PAPER_THRESHOLD, SWResult, sw_test

__all__ = ["MIN_CHECK_LENGTH", "DRIFT_SIGMAS", "MarkovVerdict", "check_markov"]

#: Shortest series the check accepts (3 differences, the Shapiro-Wilk floor).
MIN_CHECK_LENGTH = 4

#: Drift flag threshold: |mean error| exceeding this many standard errors.
DRIFT_SIGMAS = 2.0


@dataclass(frozen=True)
class MarkovVerdict:
    """Outcome of the Markov check.

    ``drift_warning`` is set when the mean error differs from zero by more
    than ``DRIFT_SIGMAS`` standard errors of the mean; a drifting series can
    still pass the normality test (the differences are normal around a
    nonzero center) but violates the zero-mean noise assumption, so the
    symmetric prediction bands would be miscentered.
    """

    is_markov: bool
    sw: SWResult
    error_mean: float
    error_stddev: float
    drift_warning: bool
    n_errors: int


def check_markov(
    series: TimeSeries, p: float = 0.05, rule: str = RULE_PAPER_THRESHOLD
) -> MarkovVerdict:
    """Decide whether ``series`` is Markovian under the additive-noise model.

    Requires at least :data:`MIN_CHECK_LENGTH` observations.  Raises
    :class:`~markovband.series.DegenerateSeriesError` when all first
    differences are equal (zero-variance errors, e.g. a pure ramp), where
    neither the test statistic nor a band is defined.
    """
    if len(series) < MIN_CHECK_LENGTH:
        raise ValueError(
            f"Markov check requires at least {MIN_CHECK_LENGTH} observations, "
            f"got {len(series)}"
        )
    errors = difference(series)
    if errors.variance == 0.0:
        raise DegenerateSeriesError(
            "all first differences are equal; the normality check and the "
            "prediction band are undefined for a noise-free series"
        )
    result = sw_test(errors.errors, p=p, rule=rule)
    n = len(errors)
    drift = abs(errors.mean) > DRIFT_SIGMAS * errors.stddev / math.sqrt(n)
    return MarkovVerdict(
        is_markov=result.normal,
        sw=result,
        error_mean=errors.mean,
        error_stddev=errors.stddev,
        drift_warning=drift,
        n_errors=n,
    )
