"""Point estimates, intervals and log-log slopes."""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np
from scipy import stats

Z_95 = 1.959963984540054


class Estimate(NamedTuple):
    estimate: float
    se: float
    ci_low: float
    ci_high: float


def wilson_interval(successes: int, n: int, z: float = Z_95) -> tuple[float, float]:
    if n == 0:
        return 0.0, 1.0
    p = successes / n
    denominator = 1.0 + z * z / n
    centre = (p + z * z / (2 * n)) / denominator
    half = z * math.sqrt(p * (1.0 - p) / n + z * z / (4 * n * n)) / denominator
    low = 0.0 if successes == 0 else max(0.0, centre - half)
    high = 1.0 if successes == n else min(1.0, centre + half)
    return low, high


def proportion(successes: int, n: int) -> Estimate:
    """p̂ = s/n with binomial SE and the 95% Wilson interval."""
    if n == 0:
        return Estimate(0.0, 0.0, 0.0, 1.0)
    p = successes / n
    low, high = wilson_interval(successes, n)
    return Estimate(p, math.sqrt(p * (1.0 - p) / n), low, high)


def mean_estimate(values: Sequence[float] | np.ndarray) -> Estimate:
    """Sample mean with a normal 95% interval."""
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        return Estimate(math.nan, math.nan, math.nan, math.nan)
    mean = float(data.mean())
    se = float(data.std(ddof=1) / math.sqrt(data.size)) if data.size > 1 else math.nan
    return Estimate(mean, se, mean - Z_95 * se, mean + Z_95 * se)


class SlopeFit(NamedTuple):
    slope: float
    intercept: float
    se: float
    ci_low: float
    ci_high: float
    points: int


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> SlopeFit:
    """Least-squares slope of log y against log x with a t-based 95% interval."""
    return linear_slope(np.log(np.asarray(x, dtype=float)), np.log(np.asarray(y, dtype=float)))


def linear_slope(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> SlopeFit:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 2:
        raise ValueError(f"A slope needs at least two points, got {x.size}")
    fit = stats.linregress(x, y)
    if x.size > 2:
        half = float(stats.t.ppf(0.975, x.size - 2)) * fit.stderr
    else:
        half = math.nan
    return SlopeFit(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        se=float(fit.stderr),
        ci_low=float(fit.slope - half),
        ci_high=float(fit.slope + half),
        points=int(x.size),
    )


def finite_or_none(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    return float(value)
