"""Monte Carlo calibration of the Markov check and the prediction bands.

Each trial generates a Gaussian random walk, runs the Markov check on a
history prefix, estimates sigma from that prefix, and then checks how often
the realized future falls inside the sqrt(k)-law band.  Aggregated over
trials this measures (a) the acceptance rate of the check on data that truly
satisfies the model and (b) the empirical coverage of the bands.  A
one-standard-deviation band covers a N(0,1) deviation with probability
erf(1/sqrt(2)) ~= 0.6827, so per-step coverage near 0.68 -- flat in k -- is
the calibrated outcome; coverage near 1.0 would signal a bug, not success.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .markov import MIN_CHECK_LENGTH, check_markov
from .rng import DEFAULT_SEED, substream
from .series import TimeSeries
from .swilk import RULE_PAPER_THRESHOLD

__all__ = ["SimulationReport", "generate_walk", "run_calibration"]

MIN_TRIALS = 100
MIN_WALK_LENGTH = 10


@dataclass(frozen=True)
class SimulationReport:
    """Aggregated calibration results.

    ``coverage_per_step[k-1]`` is the fraction of trials whose realized
    step-k future landed inside x_last +/- sqrt(k) * sigma-hat.
    ``sigma_hat_rel_error`` is |mean sigma-hat - true sigma| / true sigma.
    """

    trials: int
    walk_length: int
    horizon: int
    true_sigma: float
    markov_acceptance_rate: float
    coverage_per_step: tuple[float, ...]
    sigma_hat_mean: float
    sigma_hat_rel_error: float

    def to_dict(self) -> dict:
        return {
            "trials": int(self.trials),
            "walk_length": int(self.walk_length),
            "horizon": int(self.horizon),
            "true_sigma": float(self.true_sigma),
            "markov_acceptance_rate": float(self.markov_acceptance_rate),
            "coverage_per_step": [float(c) for c in self.coverage_per_step],
            "sigma_hat_mean": float(self.sigma_hat_mean),
            "sigma_hat_rel_error": float(self.sigma_hat_rel_error),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _walk_values(x0: float, sigma: float, steps: int, gen) -> np.ndarray:
    noise = gen.standard_normal(steps) * sigma
    values = np.empty(steps + 1)
    values[0] = x0
    values[1:] = x0 + np.cumsum(noise)
    return values


def generate_walk(x0: float, sigma: float, length: int, seed: int) -> TimeSeries:
    """A Gaussian random walk of ``length`` observations starting at x0.

    Observation j is x0 plus the cumulative sum of j independent
    N(0, sigma^2) draws from ``substream(seed, 0)``; the same arguments
    always produce the identical series.
    """
    if not math.isfinite(x0):
        raise ValueError(f"x0 must be finite, got {x0!r}")
    if not (math.isfinite(sigma) and sigma >= 0.0):
        raise ValueError(f"sigma must be finite and >= 0, got {sigma!r}")
    if length < 2:
        raise ValueError(f"walk length must be >= 2, got {length}")
    return TimeSeries(values=_walk_values(x0, sigma, length - 1, substream(seed, 0)))


def run_calibration(
    trials: int = 2000,
    walk_length: int = 50,
    sigma: float = 1.0,
    horizon: int = 12,
    p: float = 0.05,
    rule: str = RULE_PAPER_THRESHOLD,
    seed: int = DEFAULT_SEED,
    use_true_sigma: bool = False,
) -> SimulationReport:
    """Measure acceptance rate and band coverage on true random walks.

    Trial t draws walk_length - 1 + horizon noise values from
    ``substream(seed, t)`` and builds one walk from them: the first
    ``walk_length`` observations are the history, the rest the future.  The
    Markov check runs on the history; the band is centered on the last
    history value with sigma-hat estimated from the history differences
    (or the true sigma when ``use_true_sigma`` is set).  Per-trial
    substreams make the report a pure function of its arguments and allow
    trials to be recomputed independently.
    """
    if trials < MIN_TRIALS:
        raise ValueError(f"trials must be >= {MIN_TRIALS}, got {trials}")
    if walk_length < MIN_WALK_LENGTH:
        raise ValueError(
            f"walk_length must be >= {MIN_WALK_LENGTH}, got {walk_length}"
        )
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise ValueError(f"sigma must be finite and > 0, got {sigma!r}")

    assert walk_length >= MIN_CHECK_LENGTH
    steps = np.arange(1, horizon + 1, dtype=float)
    root_k = np.sqrt(steps)
    accepted = 0
    covered = np.zeros(horizon)
    sigma_hat_sum = 0.0
    for t in range(trials):
        values = _walk_values(0.0, sigma, walk_length - 1 + horizon, substream(seed, t))
        history = TimeSeries(values=values[:walk_length])
        verdict = check_markov(history, p=p, rule=rule)
        accepted += verdict.is_markov
        sigma_hat_sum += verdict.error_stddev
        band_sigma = sigma if use_true_sigma else verdict.error_stddev
        x_last = values[walk_length - 1]
        future = values[walk_length:]
        covered += np.abs(future - x_last) <= root_k * band_sigma

    sigma_hat_mean = sigma_hat_sum / trials
    return SimulationReport(
        trials=trials,
        walk_length=walk_length,
        horizon=horizon,
        true_sigma=float(sigma),
        markov_acceptance_rate=accepted / trials,
        coverage_per_step=tuple(float(c) for c in covered / trials),
        sigma_hat_mean=sigma_hat_mean,
        sigma_hat_rel_error=abs(sigma_hat_mean - sigma) / sigma,
    )
