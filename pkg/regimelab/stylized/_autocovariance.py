import logging
from dataclasses import dataclass
from functools import partial
from typing import Tuple

import numpy as np

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, replicate
from regimelab.chain import transition_matrix
from regimelab.models import Grid, RegimeParams, simulate_drivers, simulate_fb_hmm

LOGGER = logging.getLogger("regimelab")

PANELS = 64
GRID_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AutocovarianceReport:
    """Cov(dR_t, dR_s) split into the drift double integral, the Monte Carlo cross term and dt^2 (mu^T nu)^2.

    ``sample_covariance`` is the brute-force estimate from the same replications.
    """

    drift_term: float
    cross_term: float
    cross_stderr: float
    mean_term: float
    sample_covariance: float
    sample_stderr: float
    replications: int

    @property
    def total(self) -> float:
        return self.drift_term + self.cross_term - self.mean_term

    @property
    def combined_stderr(self) -> float:
        return float(np.hypot(self.cross_stderr, self.sample_stderr))


def drift_double_integral(params: RegimeParams, t: float, s: float, dt: float, panels: int = PANELS) -> float:
    """Midpoint rule for the integral over u in [t, t+dt], r in [s, s+dt] of sum_ij mu_i mu_j exp(Q(r-u))_ij nu_i.

    The integrand depends on r - u only, so the panels x panels grid needs 2 * panels - 1 matrix exponentials.
    """
    h = dt / panels
    offsets = np.arange(-(panels - 1), panels)
    weights = panels - np.abs(offsets)
    kernels = transition_matrix(params.rates, (s - t) + offsets * h)
    values = np.einsum("i,lij,j->l", params.mu * params.stationary, kernels, params.mu)
    return float(h * h * np.sum(weights * values))


def _grid_index(time: float, dt: float) -> int:
    index = int(round(time / dt))
    if abs(index * dt - time) > GRID_TOLERANCE * max(1.0, abs(time)):
        raise ConfigError(msgs.OFF_GRID_TIME_MSG.format(time, dt))
    return index


def _autocovariance_block(
    params: RegimeParams, grid: Grid, kt: int, ks: int, seed: int, start: int, count: int
) -> Tuple[FloatArray, FloatArray, FloatArray]:
    drivers = simulate_drivers(grid, params.rates, seed, count, start=start)
    bundle = simulate_fb_hmm(params, drivers)
    stochastic = bundle.vol[:, kt] * drivers.dW[:, kt]
    centred_drift = (params.mu[drivers.states[:, ks]] - params.mu @ params.stationary) * grid.dt
    return stochastic * centred_drift, bundle.increments[:, kt], bundle.increments[:, ks]


def linear_autocovariance(
    params: RegimeParams,
    t: float,
    s: float,
    dt: float,
    replications: int,
    seed: int = 0,
    batch_size: int = 10_000,
    workers: int = 1,
) -> AutocovarianceReport:
    """Autocovariance decomposition of FB-HMM increments over [t, t+dt] and [s, s+dt].

    The cross term E[int sigma^T Yhat dW * int mu^T Y dr] is estimated on a grid of step ``dt`` with the drift
    centred at its stationary mean, which leaves the expectation unchanged since the stochastic integral has
    mean 0. ``t`` and ``s`` must lie on that grid.
    """
    if not t + dt < s:
        raise ConfigError(msgs.AUTOCOV_ORDER_MSG.format(t, dt, s))
    if replications < 2:
        raise ConfigError(msgs.TOO_FEW_REPLICATIONS_MSG.format("linear_autocovariance", 2, replications))
    params.require_sigma("fb")
    kt, ks = _grid_index(t, dt), _grid_index(s, dt)
    grid = Grid((ks + 1) * dt, ks + 1)
    blocks = replicate(partial(_autocovariance_block, params, grid, kt, ks, seed), replications, batch_size, workers)
    cross, first, second = (np.concatenate(parts) for parts in zip(*blocks))
    products = (first - first.mean()) * (second - second.mean())
    LOGGER.debug(f"autocovariance at t={t} s={s} from {replications} replications")
    return AutocovarianceReport(
        drift_term=drift_double_integral(params, t, s, dt),
        cross_term=float(cross.mean()),
        cross_stderr=float(cross.std(ddof=1) / np.sqrt(replications)),
        mean_term=float(dt**2 * (params.mu @ params.stationary) ** 2),
        sample_covariance=float(products.sum() / (replications - 1)),
        sample_stderr=float(products.std(ddof=1) / np.sqrt(replications)),
        replications=replications,
    )
