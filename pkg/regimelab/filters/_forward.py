from typing import Union

import numpy as np
import numpy.typing as npt
from scipy.stats import norm

from regimelab._helpers import FloatArray
from regimelab.chain import RateMatrix, as_rate_matrix, transition_matrix
from regimelab.chain._path import InitialState, initial_distribution
from regimelab.filters._zakai import filter_path


def forward_filter(
    increments: npt.ArrayLike,
    mu: npt.ArrayLike,
    sigma: npt.ArrayLike,
    q: Union[RateMatrix, npt.ArrayLike],
    dt: float,
    prior: InitialState = None,
) -> FloatArray:
    """Scaled forward algorithm of the discrete-time HMM sampled every ``dt``.

    Transitions are exp(Q dt); the increment ending at t_k is Normal(mu_i dt, sigma_i^2 dt) given state i.
    ``sigma`` is either the scalar HMM volatility or one volatility per state.
    """
    rates = as_rate_matrix(q)
    drift = np.asarray(mu, dtype=float) * dt
    scale = np.broadcast_to(np.asarray(sigma, dtype=float), drift.shape) * np.sqrt(dt)

    def log_emission(dR: FloatArray, yhat: FloatArray) -> FloatArray:
        return norm.logpdf(dR[..., None], loc=drift, scale=scale)  # type: ignore[no-any-return]

    return filter_path(increments, initial_distribution(rates, prior), transition_matrix(rates, dt), log_emission)
