"""Robust (likelihood-factor) discretization of the Zakai equation.

The unnormalized filter is advanced as rho_k = diag(phi_k) (I + dt Q^T) rho_{k-1}. Vectors are stored as rows,
so (I + dt Q^T) rho becomes ``rho @ (I + dt Q)``. All recursions accept a leading replication axis.
"""

from typing import TYPE_CHECKING, Callable, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from regimelab import _msgs as msgs
from regimelab._helpers import ConeError, FloatArray, StabilityError
from regimelab.chain import RateMatrix, as_rate_matrix
from regimelab.chain._path import InitialState, initial_distribution

if TYPE_CHECKING:
    from regimelab.models import Grid, RegimeParams

FLOOR = 1e-300

LogLikelihood = Callable[[FloatArray, FloatArray], FloatArray]


def normalize(rho: npt.ArrayLike) -> FloatArray:
    """Kallianpur-Striebel normalization rho / 1^T rho along the last axis."""
    values = np.asarray(rho, dtype=float)
    if not np.all(values > 0):
        raise ConeError(msgs.CONE_VIOLATION_MSG)
    return values / values.sum(axis=-1, keepdims=True)  # type: ignore[no-any-return]


def propagator(q: Union[RateMatrix, npt.ArrayLike], dt: float) -> FloatArray:
    """Row-vector form of I + dt Q^T."""
    rates = as_rate_matrix(q)
    rates.check_step(dt)
    return np.eye(rates.d) + dt * rates.values  # type: ignore[no-any-return]


def log_likelihood_factor(dR: npt.ArrayLike, sigma_eff: npt.ArrayLike, mu: FloatArray, dt: float) -> FloatArray:
    """log phi^i = (mu_i dR - mu_i^2 dt / 2) / sigma_eff^2, one column per state."""
    increment = np.asarray(dR, dtype=float)[..., None]
    variance = np.asarray(sigma_eff, dtype=float)[..., None] ** 2
    return (mu * increment - 0.5 * mu**2 * dt) / variance  # type: ignore[no-any-return]


def robust_zakai_step(
    rho_prev: npt.ArrayLike,
    dR: npt.ArrayLike,
    sigma_eff: npt.ArrayLike,
    mu: npt.ArrayLike,
    q: Union[RateMatrix, npt.ArrayLike],
    dt: float,
) -> FloatArray:
    """One step of the robust recursion, without normalization.

    :param rho_prev: positive unnormalized filter, shape (..., d)
    :param dR: return increment over the step, shape (...)
    :param sigma_eff: volatility used in the likelihood factor, shape (...)
    :param mu: drift per state
    :param q: rate matrix
    :param dt: step length, must satisfy dt * max(-Q_ii) < 1
    :returns: rho_k, shape (..., d)
    """
    if not np.all(np.asarray(sigma_eff) > 0):
        raise StabilityError(msgs.NONPOSITIVE_VOLATILITY_MSG)
    predicted = np.asarray(rho_prev, dtype=float) @ propagator(q, dt)
    rho = np.exp(log_likelihood_factor(dR, sigma_eff, np.asarray(mu, dtype=float), dt)) * predicted
    if not np.all(rho > 0):
        raise ConeError(msgs.CONE_VIOLATION_MSG)
    return rho  # type: ignore[no-any-return]


def _advance(yhat: FloatArray, dR: FloatArray, log_likelihood: LogLikelihood, transition: FloatArray) -> FloatArray:
    log_phi = log_likelihood(dR, yhat)
    log_phi = log_phi - log_phi.max(axis=-1, keepdims=True)
    rho = np.exp(log_phi) * (yhat @ transition)
    if not np.all(rho >= 0):
        raise ConeError(msgs.CONE_VIOLATION_MSG)
    rho = np.maximum(rho, FLOOR)
    return rho / rho.sum(axis=-1, keepdims=True)  # type: ignore[no-any-return]


def filter_path(
    increments: npt.ArrayLike, prior: FloatArray, transition: FloatArray, log_likelihood: LogLikelihood
) -> FloatArray:
    """Normalized filter sequence Y_0..Y_n for increments of shape (n,) or (M, n)."""
    steps = np.asarray(increments, dtype=float)
    batch = np.atleast_2d(steps)
    replications, n = batch.shape
    out = np.empty((replications, n + 1, prior.shape[-1]))
    out[:, 0] = prior
    for k in range(n):
        out[:, k + 1] = _advance(out[:, k], batch[:, k], log_likelihood, transition)
    return out[0] if steps.ndim == 1 else out


def run_hmm_filter(
    increments: npt.ArrayLike, params: "RegimeParams", grid: "Grid", prior: InitialState = None
) -> FloatArray:
    """HMM filter with constant volatility sigma0; prior nu unless given."""
    sigma0 = params.volatility0
    mu, dt = params.mu, grid.dt

    def log_likelihood(dR: FloatArray, yhat: FloatArray) -> FloatArray:
        return log_likelihood_factor(dR, sigma0, mu, dt)

    prior_weights = initial_distribution(params.rates, prior)
    return filter_path(increments, prior_weights, propagator(params.rates, dt), log_likelihood)


def _fb_log_likelihood(params: "RegimeParams", dt: float) -> LogLikelihood:
    sigma, mu = params.require_sigma("fb"), params.mu

    def log_likelihood(dR: FloatArray, yhat: FloatArray) -> FloatArray:
        return log_likelihood_factor(dR, yhat @ sigma, mu, dt)

    return log_likelihood


def run_fb_filter(
    increments: npt.ArrayLike, params: "RegimeParams", grid: "Grid", prior: InitialState = None
) -> Tuple[FloatArray, FloatArray]:
    """Filter side of the FB-HMM recursion against given increments.

    The likelihood factor of step k uses sigma^T Y_{k-1}. Returns the filter and sigma^T Y_k.
    """
    sigma = params.require_sigma("fb")
    prior_weights = initial_distribution(params.rates, prior)
    transition = propagator(params.rates, grid.dt)
    yhat = filter_path(increments, prior_weights, transition, _fb_log_likelihood(params, grid.dt))
    return yhat, yhat @ sigma


def simulate_fb_recursion(
    drift: FloatArray, dW: FloatArray, params: "RegimeParams", grid: "Grid", prior: InitialState = None
) -> Tuple[FloatArray, FloatArray, FloatArray]:
    """Coupled FB-HMM recursion: each increment uses the volatility of the filter before it.

    :param drift: mu^T Y at left endpoints times dt, shape (M, n)
    :param dW: Brownian increments, shape (M, n)
    :returns: increments (M, n), filter (M, n+1, d), volatility (M, n+1)
    """
    sigma = params.require_sigma("fb")
    transition = propagator(params.rates, grid.dt)
    log_likelihood = _fb_log_likelihood(params, grid.dt)
    replications, n = dW.shape
    increments = np.empty((replications, n))
    yhat = np.empty((replications, n + 1, params.d))
    yhat[:, 0] = initial_distribution(params.rates, prior)
    for k in range(n):
        increments[:, k] = drift[:, k] + (yhat[:, k] @ sigma) * dW[:, k]
        yhat[:, k + 1] = _advance(yhat[:, k], increments[:, k], log_likelihood, transition)
    return increments, yhat, yhat @ sigma


def run_msm_filter(
    increments: npt.ArrayLike, params: "RegimeParams", grid: "Grid", prior: InitialState = None
) -> FloatArray:
    """Discrete-time MSM filter: robust prediction with Gaussian likelihood N(mu_i dt, sigma_i^2 dt)."""
    sigma, mu, dt = params.require_sigma("msm"), params.mu, grid.dt

    def log_likelihood(dR: FloatArray, yhat: FloatArray) -> FloatArray:
        residual = dR[..., None] - mu * dt
        return -0.5 * residual**2 / (sigma**2 * dt) - np.log(sigma)  # type: ignore[no-any-return]

    prior_weights = initial_distribution(params.rates, prior)
    return filter_path(increments, prior_weights, propagator(params.rates, dt), log_likelihood)
