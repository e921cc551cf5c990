"""Cost impact of schedule interruptions.

Monthly operational event counts (delays, cancellations, diversions, air
turnbacks, plus spare-aircraft deployments) and per-event dollar rates are
reduced to two averages:

* ADC, the average direct cost per schedule interruption, and
* ASC, the average spare-aircraft cost per schedule interruption,

each computed month by month (cost of the month divided by that month's
interruption count) and then averaged across months.  Spare deployments are
costed but are not interruptions, so they never enter a denominator.  The
sum ADC + ASC converts an interruption-count forecast into dollars: a
prediction band scales edge by edge, and sampled paths scale path by path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence, Union

import csv
import io

import numpy as np

from .forecast import ForecastBand, sample_paths

__all__ = [
    "CostRates",
    "MonthlyEvents",
    "CostSummary",
    "CostBand",
    "compute_adc",
    "compute_asc",
    "summarize_costs",
    "cost_band",
    "sample_costs",
    "load_events",
    "load_rates",
]

_EVENT_FIELDS = ("delays", "cancellations", "diversions", "air_turnbacks", "spares")
_RATE_FIELDS = ("delay", "cancellation", "diversion", "air_turnback", "spare")


@dataclass(frozen=True)
class CostRates:
    """Dollar cost per event, by event class."""

    delay: float
    cancellation: float
    diversion: float
    air_turnback: float
    spare: float

    def __post_init__(self) -> None:
        for name in _RATE_FIELDS:
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(
                    f"rate {name!r} must be finite and >= 0, got {value!r}"
                )


@dataclass(frozen=True)
class MonthlyEvents:
    """Event counts for one month.

    Delays, cancellations, diversions, and air turnbacks are schedule
    interruptions; spare-aircraft deployments are tracked for cost but do
    not count as interruptions.
    """

    delays: int
    cancellations: int
    diversions: int
    air_turnbacks: int
    spares: int

    def __post_init__(self) -> None:
        for name in _EVENT_FIELDS:
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise TypeError(f"count {name!r} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"count {name!r} must be >= 0, got {value}")

    @property
    def total_interruptions(self) -> int:
        return self.delays + self.cancellations + self.diversions + self.air_turnbacks


@dataclass(frozen=True)
class CostSummary:
    """ADC and ASC averaged over the months that produced them."""

    adc: float
    asc: float
    months: int

    @property
    def per_interruption(self) -> float:
        """Combined dollar cost per schedule interruption (ADC + ASC)."""
        return self.adc + self.asc


def _check_months(months: Sequence[MonthlyEvents]) -> None:
    if len(months) == 0:
        raise ValueError("need at least one month of event counts")
    for i, month in enumerate(months, start=1):
        if month.total_interruptions == 0:
            raise ValueError(
                f"month {i} has zero schedule interruptions; "
                "per-interruption cost is undefined"
            )


def compute_adc(months: Sequence[MonthlyEvents], rates: CostRates) -> float:
    """Average direct cost per schedule interruption across months."""
    _check_months(months)
    total = 0.0
    for month in months:
        direct = (
            rates.delay * month.delays
            + rates.cancellation * month.cancellations
            + rates.diversion * month.diversions
            + rates.air_turnback * month.air_turnbacks
        )
        total += direct / month.total_interruptions
    return total / len(months)


def compute_asc(months: Sequence[MonthlyEvents], rates: CostRates) -> float:
    """Average spare-aircraft cost per schedule interruption across months."""
    _check_months(months)
    total = 0.0
    for month in months:
        total += rates.spare * month.spares / month.total_interruptions
    return total / len(months)


def summarize_costs(months: Sequence[MonthlyEvents], rates: CostRates) -> CostSummary:
    return CostSummary(
        adc=compute_adc(months, rates),
        asc=compute_asc(months, rates),
        months=len(months),
    )


@dataclass(frozen=True, eq=False)
class CostBand:
    """A prediction band converted to dollars.

    ``lower[k-1]``/``upper[k-1]`` bound the step-k interruption cost; they
    are the count-band edges times ``per_interruption``, so ordering is
    preserved and a zero rate collapses the band to zero.
    """

    horizon: int
    per_interruption: float
    center: float
    lower: np.ndarray
    upper: np.ndarray


def cost_band(band: ForecastBand, summary: CostSummary) -> CostBand:
    """Scale each band edge by the combined per-interruption cost."""
    rate = summary.per_interruption
    if not (math.isfinite(rate) and rate >= 0.0):
        raise ValueError(f"per-interruption cost must be finite and >= 0, got {rate!r}")
    lower = band.lower * rate
    upper = band.upper * rate
    lower.setflags(write=False)
    upper.setflags(write=False)
    return CostBand(
        horizon=band.horizon,
        per_interruption=rate,
        center=band.x0 * rate,
        lower=lower,
        upper=upper,
    )


def sample_costs(
    x0: float,
    sigma: float,
    horizon: int,
    summary: CostSummary,
    count: int,
    seed: int,
) -> np.ndarray:
    """Simulated step-by-step interruption costs for ``count`` paths.

    Identical to :func:`~markovband.forecast.sample_paths` followed by
    elementwise multiplication with ``summary.per_interruption`` -- the cost
    paths are the count paths in dollars, draw for draw.
    """
    return sample_paths(x0, sigma, horizon, count, seed) * summary.per_interruption


Source = Union[str, Path, IO[str], IO[bytes]]


def _read_text(source: Source) -> str:
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8")
    raw = source.read()
    if isinstance(raw, bytes):
        return raw.decode("utf-8")
    return raw


def load_events(source: Source) -> list[MonthlyEvents]:
    """Read monthly event counts from CSV (one row per month, in order).

    The header must contain the columns delays, cancellations, diversions,
    air_turnbacks, and spares, in any order; extra columns are ignored.
    """
    reader = csv.DictReader(io.StringIO(_read_text(source)))
    header = reader.fieldnames or []
    missing = [name for name in _EVENT_FIELDS if name not in header]
    if missing:
        raise ValueError(
            f"events CSV is missing required columns: {', '.join(missing)}"
        )
    months = []
    for i, row in enumerate(reader, start=1):
        counts = {}
        for name in _EVENT_FIELDS:
            cell = row[name]
            try:
                counts[name] = int(cell)
            except (TypeError, ValueError):
                raise ValueError(
                    f"non-integer count {cell!r} for {name!r} in month row {i}"
                ) from None
        months.append(MonthlyEvents(**counts))
    if not months:
        raise ValueError("events CSV contains no data rows")
    return months


def load_rates(source: Source) -> CostRates:
    """Read per-event rates from a key=value file.

    Requires exactly the keys delay, cancellation, diversion, air_turnback,
    and spare; blank lines and '#' comments are ignored.
    """
    values: dict[str, float] = {}
    for lineno, line in enumerate(_read_text(source).splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ValueError(f"rates line {lineno} is not of the form key=value")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in _RATE_FIELDS:
            raise ValueError(f"unknown rate {key!r} on line {lineno}")
        if key in values:
            raise ValueError(f"duplicate rate {key!r} on line {lineno}")
        try:
            values[key] = float(raw.strip())
        except ValueError:
            raise ValueError(
                f"non-numeric rate value {raw.strip()!r} on line {lineno}"
            ) from None
    missing = [name for name in _RATE_FIELDS if name not in values]
    if missing:
        raise ValueError(f"rates file is missing: {', '.join(missing)}")
    return CostRates(**values)
