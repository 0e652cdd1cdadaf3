from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np
import numpy.typing as npt
from scipy.stats import norm
from statsmodels.tsa.stattools import acf

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, IntArray, NumericalError
from regimelab.chain._path import InitialState
from regimelab.models import Grid, RegimeParams, simulate_drivers, simulate_fb_hmm, simulate_hmm

TRANSFORMS: Dict[str, Callable[[FloatArray], FloatArray]] = {
    "identity": lambda x: x,
    "abs": np.abs,
    "square": np.square,
    "sign": np.sign,
}


@dataclass(frozen=True, eq=False)
class AcfReport:
    lags: IntArray
    values: FloatArray
    transform: str
    stderr: FloatArray


def transform_series(increments: npt.ArrayLike, transform: str) -> FloatArray:
    function = TRANSFORMS.get(transform)
    if function is None:
        raise ConfigError(msgs.UNKNOWN_TRANSFORM_MSG.format(transform))
    return function(np.asarray(increments, dtype=float))


def empirical_acf(
    increments: npt.ArrayLike, max_lag: int, transform: str = "identity", include_zero: bool = False
) -> AcfReport:
    """Sample autocorrelation of the transformed series at lags 1..max_lag, Bartlett standard errors."""
    series = transform_series(increments, transform)
    if series.size <= max_lag + 2:
        raise ConfigError(msgs.SERIES_TOO_SHORT_MSG.format(series.size, max_lag + 2))
    if np.ptp(series) == 0:
        raise NumericalError(msgs.CONSTANT_SERIES_MSG)
    values, confint = acf(series, nlags=max_lag, alpha=0.05, fft=False)
    stderr = (confint[:, 1] - values) / norm.ppf(0.975)
    first = 0 if include_zero else 1
    return AcfReport(np.arange(first, max_lag + 1), values[first:], transform, stderr[first:])


def lag_one_square_acf(increments: npt.ArrayLike) -> float:
    return float(empirical_acf(increments, 1, "square").values[0])


def sign_counts(values: npt.ArrayLike) -> Tuple[int, int]:
    """(negative, positive) counts, used for majority sign tests across replications."""
    array = np.asarray(values, dtype=float)
    return int(np.sum(array < 0)), int(np.sum(array > 0))


@dataclass(frozen=True)
class ClusteringVote:
    """Lag-1 autocorrelation of squared increments, FB-HMM against the equal-variance HMM on shared drivers."""

    wins: int
    replications: int
    fb_mean: float
    hmm_mean: float


def volatility_clustering_vote(
    params: RegimeParams, grid: Grid, replications: int, seed: int = 0, initial: InitialState = None
) -> ClusteringVote:
    drivers = simulate_drivers(grid, params.rates, seed, replications, initial)
    fb = simulate_fb_hmm(params, drivers)
    hmm = simulate_hmm(params.equal_variance(), drivers)
    fb_acf = np.array([lag_one_square_acf(row) for row in fb.increments])
    hmm_acf = np.array([lag_one_square_acf(row) for row in hmm.increments])
    return ClusteringVote(int(np.sum(fb_acf > hmm_acf)), replications, float(fb_acf.mean()), float(hmm_acf.mean()))
