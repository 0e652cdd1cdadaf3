import logging
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np
import pandas as pd

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, IntArray, one_hot
from regimelab.filters import run_hmm_filter, simulate_fb_recursion
from regimelab.models._drivers import Drivers
from regimelab.models._params import Grid, RegimeParams

LOGGER = logging.getLogger("regimelab")


@dataclass(frozen=True, eq=False)
class PathBundle:
    """Grid arrays of one model run, leading axis over replications.

    ``increments[:, k-1]`` is R_{t_k} - R_{t_{k-1}}; ``returns`` are the cumulative sums with R_0 = 0.
    """

    model: str
    grid: Grid
    dW: FloatArray
    chain_states: IntArray
    increments: FloatArray
    returns: FloatArray
    filter: FloatArray
    vol: FloatArray

    @property
    def replications(self) -> int:
        return int(self.dW.shape[0])

    @property
    def d(self) -> int:
        return int(self.filter.shape[-1])

    def to_frame(self, replication: int = 0) -> pd.DataFrame:
        """Columns t, state (1-based), dW (increment ending at t), R, Yhat_1..Yhat_d, vol."""
        frame = pd.DataFrame(
            {
                "t": self.grid.times,
                "state": self.chain_states[replication] + 1,
                "dW": np.concatenate([[np.nan], self.dW[replication]]),
                "R": self.returns[replication],
            }
        )
        for i in range(self.d):
            frame[f"Yhat_{i + 1}"] = self.filter[replication, :, i]
        frame["vol"] = self.vol[replication]
        return frame


def _bundle(
    model: str, drivers: Drivers, increments: FloatArray, yhat: FloatArray, vol: FloatArray
) -> PathBundle:
    returns = np.concatenate([np.zeros((increments.shape[0], 1)), np.cumsum(increments, axis=1)], axis=1)
    return PathBundle(model, drivers.grid, drivers.dW, drivers.states, increments, returns, yhat, vol)


def _drift(params: RegimeParams, drivers: Drivers) -> FloatArray:
    return params.mu[drivers.states[:, :-1]] * drivers.grid.dt  # type: ignore[no-any-return]


def simulate_hmm(params: RegimeParams, drivers: Drivers) -> PathBundle:
    """dR = mu^T Y dt + sigma0 dW; the filter field is the HMM robust filter."""
    params.check_grid(drivers.grid)
    sigma0 = params.volatility0
    increments = _drift(params, drivers) + sigma0 * drivers.dW
    yhat = run_hmm_filter(increments, params, drivers.grid)
    vol = np.full(drivers.states.shape, sigma0)
    LOGGER.debug(f"simulated {drivers.replications} HMM path(s) with sigma0={sigma0:.6g}")
    return _bundle("hmm", drivers, increments, yhat, vol)


def simulate_msm(params: RegimeParams, drivers: Drivers) -> PathBundle:
    """dR = mu^T Y dt + sigma^T Y dW; the chain is observable, so the filter field is its indicator."""
    sigma = params.require_sigma("msm")
    increments = _drift(params, drivers) + sigma[drivers.states[:, :-1]] * drivers.dW
    yhat = one_hot(drivers.states, params.d)
    LOGGER.debug(f"simulated {drivers.replications} MSM path(s)")
    return _bundle("msm", drivers, increments, yhat, sigma[drivers.states])


def simulate_fb_hmm(params: RegimeParams, drivers: Drivers) -> PathBundle:
    """dR = mu^T Y dt + sigma^T Yhat dW with Yhat from the robust recursion on the simulated returns."""
    params.check_grid(drivers.grid)
    increments, yhat, vol = simulate_fb_recursion(_drift(params, drivers), drivers.dW, params, drivers.grid)
    LOGGER.debug(f"simulated {drivers.replications} FB-HMM path(s)")
    return _bundle("fb", drivers, increments, yhat, vol)


SIMULATORS: Dict[str, Callable[[RegimeParams, Drivers], PathBundle]] = {
    "hmm": simulate_hmm,
    "msm": simulate_msm,
    "fb": simulate_fb_hmm,
}


def simulate_model(kind: str, params: RegimeParams, drivers: Drivers) -> PathBundle:
    simulator = SIMULATORS.get(kind.lower())
    if simulator is None:
        raise ConfigError(msgs.UNKNOWN_MODEL_MSG.format(kind))
    return simulator(params, drivers)
