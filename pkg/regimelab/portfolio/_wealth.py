import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import numpy.typing as npt
import pandas as pd

from regimelab import _msgs as msgs
from regimelab._helpers import BoolArray, ConfigError, FloatArray, mean_and_stderr
from regimelab.chain._path import InitialState
from regimelab.models import Grid, RegimeParams, simulate_drivers, simulate_model
from regimelab.portfolio._fractions import Clamp, strategy_set

LOGGER = logging.getLogger("regimelab")


@dataclass(frozen=True, eq=False)
class WealthPaths:
    values: FloatArray
    bankrupt: BoolArray

    @property
    def log_terminal(self) -> FloatArray:
        """log X_T, -inf on bankrupt paths."""
        terminal = self.values[..., -1]
        with np.errstate(divide="ignore"):
            return np.where(self.bankrupt, -np.inf, np.log(np.where(self.bankrupt, 1.0, terminal)))


def simulate_wealth(
    increments: npt.ArrayLike, fractions: npt.ArrayLike, x0: float = 1.0, clamp: Clamp = None
) -> WealthPaths:
    """X_k = X_{k-1} (1 + pi_{k-1} dR_k).

    Fractions may be given per step (n values) or per grid point (n+1, the last one unused). A path whose
    wealth reaches 0 or below is flagged bankrupt and held at 0 from there on.
    """
    if not x0 > 0:
        raise ConfigError(msgs.NONPOSITIVE_WEALTH_MSG.format(x0))
    steps = np.asarray(increments, dtype=float)
    pi = np.asarray(fractions, dtype=float)
    n = steps.shape[-1]
    if pi.ndim and pi.shape[-1] == n + 1:
        pi = pi[..., :n]
    if pi.ndim and pi.shape[-1] != n:
        raise ConfigError(msgs.LENGTH_MISMATCH_MSG.format("fractions", pi.shape[-1], n))
    if clamp is not None:
        pi = np.clip(pi, *clamp)
    growth = 1.0 + pi * steps
    ruined = np.logical_or.accumulate(growth <= 0, axis=-1)
    growth = np.where(ruined, 0.0, growth)
    start = np.full(growth.shape[:-1] + (1,), float(x0))
    values = np.concatenate([start, x0 * np.cumprod(growth, axis=-1)], axis=-1)
    return WealthPaths(values, ruined[..., -1])


@dataclass(frozen=True)
class UtilityEstimate:
    model: str
    strategy: str
    mean: float
    stderr: float
    bankrupt_count: int
    replications: int


def expected_log_utility(
    params: RegimeParams,
    kinds: Sequence[str],
    replications: int,
    grid: Grid,
    seed: int,
    x0: float = 1.0,
    clamp: Clamp = (0.0, 1.0),
    constants: Sequence[float] = (0.0, 0.25, 0.5, 1.0),
    initial: InitialState = None,
) -> List[UtilityEstimate]:
    """Monte Carlo mean and standard error of log X_T for every strategy of every model's comparison set.

    All models run on the same drivers. Bankrupt paths are excluded from the mean and counted.
    """
    if replications < 2:
        raise ConfigError(msgs.TOO_FEW_REPLICATIONS_MSG.format("expected_log_utility", 2, replications))
    drivers = simulate_drivers(grid, params.rates, seed, replications, initial)
    estimates = []
    for kind in kinds:
        bundle = simulate_model(kind, params, drivers)
        for strategy in strategy_set(kind, params, bundle, constants, clamp):
            paths = simulate_wealth(bundle.increments, strategy.fractions, x0, strategy.clamp)
            mean, stderr = mean_and_stderr(paths.log_terminal[~paths.bankrupt])
            bankrupt = int(paths.bankrupt.sum())
            estimates.append(UtilityEstimate(kind, strategy.name, mean, stderr, bankrupt, replications))
        LOGGER.debug(f"evaluated portfolio strategies on {replications} {kind} paths")
    return estimates


def utility_frame(estimates: Sequence[UtilityEstimate], prefix_model: Optional[bool] = None) -> pd.DataFrame:
    """Columns strategy, mean_logX_T, stderr, bankrupt_count; strategy is ``model/name`` when models are mixed."""
    if prefix_model is None:
        prefix_model = len({estimate.model for estimate in estimates}) > 1
    return pd.DataFrame(
        {
            "strategy": [f"{e.model}/{e.strategy}" if prefix_model else e.strategy for e in estimates],
            "mean_logX_T": [e.mean for e in estimates],
            "stderr": [e.stderr for e in estimates],
            "bankrupt_count": [e.bankrupt_count for e in estimates],
        }
    )
