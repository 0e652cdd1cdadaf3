import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
import numpy.typing as npt

from regimelab._helpers import CHAIN_STREAM, NOISE_STREAM, FloatArray, IntArray, replication_rng
from regimelab.chain import ChainPath, RateMatrix, simulate_chain
from regimelab.chain._path import InitialState
from regimelab.models._params import Grid

LOGGER = logging.getLogger("regimelab")


@dataclass(frozen=True, eq=False)
class Drivers:
    """Chain paths and Brownian increments shared by all three models, one row per replication.

    ``dW`` has shape (M, n); ``states`` holds the chain sampled at the n+1 grid points, shape (M, n+1).
    """

    grid: Grid
    chains: Tuple[ChainPath, ...]
    dW: FloatArray
    states: IntArray

    @property
    def replications(self) -> int:
        return len(self.chains)

    def select(self, replication: int) -> "Drivers":
        return Drivers(
            self.grid,
            (self.chains[replication],),
            self.dW[replication : replication + 1],
            self.states[replication : replication + 1],
        )

    def coarsen(self, factor: int) -> "Drivers":
        """Same chains on a grid ``factor`` times coarser, Brownian increments aggregated."""
        grid = self.grid.coarsen(factor)
        dW = self.dW.reshape(self.replications, grid.steps, factor).sum(axis=-1)
        return Drivers(grid, self.chains, dW, np.ascontiguousarray(self.states[:, ::factor]))


def simulate_driving_noise(
    grid: Grid, q: Union[RateMatrix, npt.ArrayLike], rng: np.random.Generator, initial: InitialState = None
) -> Tuple[ChainPath, FloatArray]:
    """One exact chain path on [0, T] and n independent Normal(0, dt) increments from a single stream."""
    chain = simulate_chain(q, grid.horizon, rng, initial)
    return chain, rng.normal(0.0, np.sqrt(grid.dt), grid.steps)


def simulate_drivers(
    grid: Grid,
    q: Union[RateMatrix, npt.ArrayLike],
    seed: int,
    replications: int = 1,
    initial: InitialState = None,
    start: int = 0,
) -> Drivers:
    """Drivers for replications ``start .. start + replications - 1``.

    The chain and the Brownian path of a replication come from separate streams keyed by its index, so a
    replication sees the same chain on every grid and whatever the batch it is simulated in.
    """
    chains = []
    dW = np.empty((replications, grid.steps))
    states = np.empty((replications, grid.steps + 1), dtype=np.int64)
    times = grid.times
    for row, replication in enumerate(range(start, start + replications)):
        chain = simulate_chain(q, grid.horizon, replication_rng(seed, replication, CHAIN_STREAM), initial)
        dW[row] = replication_rng(seed, replication, NOISE_STREAM).normal(0.0, np.sqrt(grid.dt), grid.steps)
        states[row] = chain.states_at(times)
        chains.append(chain)
    LOGGER.debug(f"simulated drivers for replications {start}..{start + replications - 1} on {grid}")
    return Drivers(grid, tuple(chains), dW, states)
