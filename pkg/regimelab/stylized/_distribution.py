from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from numpy.lib.stride_tricks import sliding_window_view
from scipy import stats

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, IntArray

MIN_LENGTH = 100


@dataclass(frozen=True, eq=False)
class DistributionReport:
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float
    counts: IntArray
    edges: FloatArray


def distribution_report(increments: npt.ArrayLike, bins: int = 50) -> DistributionReport:
    """Sample moments and histogram. A constant series gets variance 0 and a single bin."""
    x = np.asarray(increments, dtype=float).ravel()
    if x.size < MIN_LENGTH:
        raise ConfigError(msgs.SERIES_TOO_SHORT_MSG.format(x.size, MIN_LENGTH - 1))
    if np.ptp(x) == 0:
        return DistributionReport(float(x[0]), 0.0, float("nan"), float("nan"), np.array([x.size]), x[:1].repeat(2))
    counts, edges = np.histogram(x, bins=bins)
    return DistributionReport(
        float(x.mean()), float(x.var(ddof=1)), float(stats.skew(x)), float(stats.kurtosis(x)), counts, edges
    )


@dataclass(frozen=True)
class LeverageReport:
    correlation: float
    stderr: float
    pairs: int


def leverage_proxy(increments: npt.ArrayLike, lag_window: int) -> LeverageReport:
    """Correlation of dR_k with the realized volatility sqrt(sum dR_j^2) over the next ``lag_window`` steps."""
    x = np.asarray(increments, dtype=float).ravel()
    if lag_window < 1:
        raise ConfigError(msgs.INVALID_WINDOW_MSG.format(lag_window))
    if x.size <= lag_window + 2:
        raise ConfigError(msgs.SERIES_TOO_SHORT_MSG.format(x.size, lag_window + 2))
    future = np.sqrt(sliding_window_view(x**2, lag_window)[1:].sum(axis=-1))
    past = x[: future.size]
    r = float(stats.pearsonr(past, future)[0])
    return LeverageReport(r, float(np.sqrt((1.0 - r**2) / (past.size - 2))), int(past.size))
