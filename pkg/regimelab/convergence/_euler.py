import logging
from dataclasses import dataclass
from functools import partial
from typing import Sequence, Tuple

import numpy as np
import pandas as pd

from regimelab import _msgs as msgs
from regimelab._helpers import FloatArray, GridError, IntArray, replicate
from regimelab.chain._path import InitialState
from regimelab.models import Grid, RegimeParams, simulate_drivers, simulate_fb_hmm

LOGGER = logging.getLogger("regimelab")


@dataclass(frozen=True, eq=False)
class ConvergenceReport:
    """Mean squared Euler error at T per coarse grid size, with its drift and diffusion parts."""

    n_values: IntArray
    mse_estimates: FloatArray
    stderr: FloatArray
    drift_mse: FloatArray
    diff_mse: FloatArray
    fine_n: int
    replications: int

    def __post_init__(self) -> None:
        _check_divisibility(self.n_values, self.fine_n)

    @property
    def decay_ratio(self) -> float:
        return float(self.mse_estimates[-1] / self.mse_estimates[0])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "n": self.n_values,
                "mse": self.mse_estimates,
                "stderr": self.stderr,
                "drift_mse": self.drift_mse,
                "diff_mse": self.diff_mse,
            }
        )


def _check_divisibility(n_values: Sequence[int], fine_n: int) -> None:
    failures = [msgs.GRID_DIVISIBILITY_MSG.format(fine_n, n) for n in n_values if n < 1 or fine_n % n]
    if failures:
        raise GridError(failures[0], failures)


def euler_sums(
    drift_rate: FloatArray, vol: FloatArray, dW: FloatArray, factor: int, step: float
) -> Tuple[FloatArray, FloatArray]:
    """Drift and diffusion sums of the Euler scheme on the grid ``factor`` times coarser than the inputs.

    Coefficients are taken at coarse left endpoints, Brownian increments aggregated over each coarse step.
    """
    replications = dW.shape[0]
    drift = (drift_rate[:, ::factor] * step).sum(axis=1)
    diffusion = (vol[:, ::factor] * dW.reshape(replications, -1, factor).sum(axis=-1)).sum(axis=1)
    return drift, diffusion


def _error_block(
    params: RegimeParams,
    fine: Grid,
    n_values: Tuple[int, ...],
    seed: int,
    initial: InitialState,
    start: int,
    count: int,
) -> Tuple[FloatArray, FloatArray]:
    drivers = simulate_drivers(fine, params.rates, seed, count, initial, start=start)
    bundle = simulate_fb_hmm(params, drivers)
    drift_rate = params.mu[drivers.states[:, :-1]]
    vol = bundle.vol[:, :-1]
    reference_drift, reference_diffusion = euler_sums(drift_rate, vol, drivers.dW, 1, fine.dt)
    drift_errors = np.empty((count, len(n_values)))
    diffusion_errors = np.empty((count, len(n_values)))
    for column, n in enumerate(n_values):
        drift, diffusion = euler_sums(drift_rate, vol, drivers.dW, fine.steps // n, fine.horizon / n)
        drift_errors[:, column] = reference_drift - drift
        diffusion_errors[:, column] = reference_diffusion - diffusion
    return drift_errors, diffusion_errors


def euler_error_experiment(
    params: RegimeParams,
    n_values: Sequence[int],
    fine_n: int,
    replications: int,
    horizon: float,
    seed: int,
    initial: InitialState = None,
    batch_size: int = 100,
    workers: int = 1,
) -> ConvergenceReport:
    """Strong L2 error at T of the Euler scheme for FB-HMM returns against a fine-grid reference.

    Every replication simulates one exact chain and one Brownian path on the fine grid. On a coarse grid the
    drift uses mu^T Y and the diffusion uses the fine-grid filter volatility, both at coarse left endpoints.
    """
    _check_divisibility(n_values, fine_n)
    params.require_sigma("fb")
    fine = Grid(horizon, fine_n)
    params.check_grid(fine)
    task = partial(_error_block, params, fine, tuple(int(n) for n in n_values), seed, initial)
    blocks = replicate(task, replications, batch_size, workers)
    drift_errors = np.concatenate([block[0] for block in blocks])
    diffusion_errors = np.concatenate([block[1] for block in blocks])
    squared = (drift_errors + diffusion_errors) ** 2
    LOGGER.debug(f"Euler errors for n={list(n_values)} against fine_n={fine_n}, {replications} replications")
    return ConvergenceReport(
        n_values=np.asarray(n_values, dtype=np.int64),
        mse_estimates=squared.mean(axis=0),
        stderr=_stderr(squared),
        drift_mse=(drift_errors**2).mean(axis=0),
        diff_mse=(diffusion_errors**2).mean(axis=0),
        fine_n=fine_n,
        replications=replications,
    )


def _stderr(samples: FloatArray) -> FloatArray:
    if samples.shape[0] < 2:
        return np.full(samples.shape[1], np.nan)
    return samples.std(axis=0, ddof=1) / np.sqrt(samples.shape[0])  # type: ignore[no-any-return]
