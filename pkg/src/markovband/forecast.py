"""Square-root-law prediction bands and Monte Carlo path sampling.

Under the additive white-noise model the k-step-ahead value is
x_0 + sum of k independent N(0, sigma^2) draws, i.e. N(x_0, k sigma^2).
The band at step k is x_0 +/- sqrt(k) * sigma: the one-standard-deviation
envelope of that distribution, covering about 68.3% of realized paths per
step (not all of them -- Gaussian steps are unbounded).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import standard_normal_matrix
from .series import DegenerateSeriesError, TimeSeries, difference

__all__ = ["ForecastBand", "make_band", "band", "sample_paths"]


@dataclass(frozen=True, eq=False)
class ForecastBand:
    """Prediction band for horizons k = 1..horizon.

    ``lower[k-1]`` and ``upper[k-1]`` bound step k; the band is exactly
    symmetric about ``x0`` (``upper - x0 == x0 - lower`` bitwise) and its
    half-width grows as sqrt(k) * sigma.
    """

    x0: float
    sigma: float
    horizon: int
    lower: np.ndarray
    upper: np.ndarray

    def half_widths(self) -> np.ndarray:
        return self.upper - self.x0

    def steps(self) -> np.ndarray:
        return np.arange(1, self.horizon + 1)


def make_band(x0: float, sigma: float, horizon: int) -> ForecastBand:
    """Band x0 +/- sqrt(k)*sigma for k = 1..horizon from explicit parameters.

    ``sigma`` may be zero (a deliberately flat band); it must be finite and
    non-negative, and ``horizon`` at least 1.
    """
    if not math.isfinite(x0):
        raise ValueError(f"x0 must be finite, got {x0!r}")
    if not (math.isfinite(sigma) and sigma >= 0.0):
        raise ValueError(f"sigma must be finite and >= 0, got {sigma!r}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    k = np.arange(1, horizon + 1, dtype=float)
    half = np.sqrt(k) * sigma
    # Snap each half-width onto the float grid at |x0| so that x0 + off and
    # x0 - off mirror bitwise; the adjustment is at most one ulp of the edge.
    m = abs(x0)
    off = (m + half) - m
    lower = x0 - off
    upper = x0 + off
    lower.setflags(write=False)
    upper.setflags(write=False)
    return ForecastBand(
        x0=float(x0), sigma=float(sigma), horizon=int(horizon), lower=lower, upper=upper
    )


def band(series: TimeSeries, horizon: int) -> ForecastBand:
    """Band anchored at the last observation, sigma estimated from the series.

    sigma-hat is the sample standard deviation of the first differences.
    Raises :class:`~markovband.series.DegenerateSeriesError` when the
    differences have zero variance (no noise to calibrate a band against).
    """
    errors = difference(series)
    if errors.variance == 0.0:
        raise DegenerateSeriesError(
            "all first differences are equal; a prediction band is undefined "
            "for a noise-free series"
        )
    return make_band(float(series.values[-1]), errors.stddev, horizon)


def sample_paths(
    x0: float, sigma: float, horizon: int, count: int, seed: int
) -> np.ndarray:
    """Simulate ``count`` random-walk paths of ``horizon`` steps from x0.

    Returns a (count, horizon) array whose column k-1 holds the step-k values
    x_k = x_0 + sum_{j<=k} eps_j with eps_j ~ N(0, sigma^2).  Output is a
    deterministic function of (x0, sigma, horizon, count, seed); the noise
    comes from fixed Philox substreams of ``seed``.
    """
    if not math.isfinite(x0):
        raise ValueError(f"x0 must be finite, got {x0!r}")
    if not (math.isfinite(sigma) and sigma >= 0.0):
        raise ValueError(f"sigma must be finite and >= 0, got {sigma!r}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    noise = standard_normal_matrix(seed, count, horizon) * sigma
    return x0 + np.cumsum(noise, axis=1)
