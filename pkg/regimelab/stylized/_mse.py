import logging
from dataclasses import dataclass
from functools import partial
from typing import Optional, Tuple

import numpy as np

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, mean_and_stderr, replicate
from regimelab.models import Grid, RegimeParams, simulate_drivers, simulate_fb_hmm

LOGGER = logging.getLogger("regimelab")

MIN_REPLICATIONS = 1000


@dataclass(frozen=True)
class MseCandidate:
    """Squared error of one volatility estimate, and its excess over the filter-based one."""

    name: str
    mse: float
    stderr: float
    excess: float
    excess_stderr: float

    @property
    def dominated(self) -> bool:
        """True when the filter-based estimate is no worse within 2 standard errors."""
        return self.excess >= -2.0 * self.excess_stderr


@dataclass(frozen=True)
class MseReport:
    time: float
    replications: int
    filter_mse: float
    filter_stderr: float
    candidates: Tuple[MseCandidate, ...]

    @property
    def holds(self) -> bool:
        return all(candidate.dominated for candidate in self.candidates)


def _volatility_block(
    params: RegimeParams, grid: Grid, index: int, seed: int, start: int, count: int
) -> Tuple[FloatArray, FloatArray]:
    drivers = simulate_drivers(grid, params.rates, seed, count, start=start)
    bundle = simulate_fb_hmm(params, drivers)
    sigma = params.require_sigma("fb")
    return sigma[drivers.states[:, index]], bundle.vol[:, index]


def mse_optimality_check(
    params: RegimeParams,
    replications: int,
    grid: Grid,
    time: Optional[float] = None,
    seed: int = 0,
    batch_size: int = 2000,
    workers: int = 1,
) -> MseReport:
    """Compare E[(sigma^T Y_t - sigma^T Yhat_t)^2] with the error of the constants sigma^T nu and each sigma_i.

    ``time`` defaults to the middle of the grid and is rounded to the nearest grid point.
    """
    if replications < MIN_REPLICATIONS:
        raise ConfigError(msgs.TOO_FEW_REPLICATIONS_MSG.format("mse_optimality_check", MIN_REPLICATIONS, replications))
    sigma = params.require_sigma("fb")
    index = int(round((grid.horizon / 2 if time is None else time) / grid.dt))
    index = min(max(index, 0), grid.steps)
    blocks = replicate(partial(_volatility_block, params, grid, index, seed), replications, batch_size, workers)
    true_vol, filter_vol = (np.concatenate(parts) for parts in zip(*blocks))
    filter_errors = (true_vol - filter_vol) ** 2
    filter_mse, filter_stderr = mean_and_stderr(filter_errors)
    constants = [("stationary", float(sigma @ params.stationary))]
    constants.extend((f"sigma_{i + 1}", float(level)) for i, level in enumerate(sigma))
    candidates = []
    for name, level in constants:
        errors = (true_vol - level) ** 2
        mse, stderr = mean_and_stderr(errors)
        excess, excess_stderr = mean_and_stderr(errors - filter_errors)
        candidates.append(MseCandidate(name, mse, stderr, excess, excess_stderr))
    LOGGER.debug(f"volatility MSE at t={index * grid.dt:.4g} from {replications} replications")
    return MseReport(index * grid.dt, replications, filter_mse, filter_stderr, tuple(candidates))
