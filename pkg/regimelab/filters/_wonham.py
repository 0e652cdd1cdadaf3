from typing import Union

import numpy as np
import numpy.typing as npt

from regimelab._helpers import FloatArray
from regimelab.chain import RateMatrix, as_rate_matrix
from regimelab.chain._path import InitialState, initial_distribution


def wonham_euler_step(
    yhat: npt.ArrayLike,
    dR: npt.ArrayLike,
    sigma0: float,
    mu: npt.ArrayLike,
    q: Union[RateMatrix, npt.ArrayLike],
    dt: float,
) -> FloatArray:
    """Explicit Euler step of the Wonham filter, clipped to the simplex.

    dY = Q^T Y dt + (diag(g) Y - (g^T Y) Y) dV with g = mu / sigma0 and innovation dV = (dR - mu^T Y dt) / sigma0.
    """
    rates = as_rate_matrix(q).values
    y = np.asarray(yhat, dtype=float)
    drift = np.asarray(mu, dtype=float)
    g = drift / sigma0
    innovation = (np.asarray(dR, dtype=float) - (y @ drift) * dt) / sigma0
    step = y + dt * (y @ rates) + (g * y - (y @ g)[..., None] * y) * innovation[..., None]
    step = np.clip(step, 0.0, None)
    return step / step.sum(axis=-1, keepdims=True)  # type: ignore[no-any-return]


def run_wonham_filter(
    increments: npt.ArrayLike,
    mu: npt.ArrayLike,
    sigma0: float,
    q: Union[RateMatrix, npt.ArrayLike],
    dt: float,
    prior: InitialState = None,
) -> FloatArray:
    steps = np.asarray(increments, dtype=float)
    batch = np.atleast_2d(steps)
    prior_weights = initial_distribution(q, prior)
    out = np.empty((batch.shape[0], batch.shape[1] + 1, prior_weights.size))
    out[:, 0] = prior_weights
    for k in range(batch.shape[1]):
        out[:, k + 1] = wonham_euler_step(out[:, k], batch[:, k], sigma0, mu, q, dt)
    return out[0] if steps.ndim == 1 else out
