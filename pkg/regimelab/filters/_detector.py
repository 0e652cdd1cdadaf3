from typing import Optional

import numpy as np
import numpy.typing as npt

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, IntArray


def default_window(steps: int) -> int:
    return max(10, int(round(steps / 200)))


def realized_volatility(increments: npt.ArrayLike, dt: float, window: int) -> FloatArray:
    """Square root of the trailing realized variance per unit time after each increment.

    The first ``window - 1`` values average over the increments available so far.
    """
    if window < 1:
        raise ConfigError(msgs.INVALID_WINDOW_MSG.format(window))
    squares = np.asarray(increments, dtype=float) ** 2
    n = squares.shape[-1]
    cumulative = np.concatenate([np.zeros(squares.shape[:-1] + (1,)), np.cumsum(squares, axis=-1)], axis=-1)
    end = np.arange(1, n + 1)
    start = np.maximum(end - window, 0)
    total = cumulative[..., end] - cumulative[..., start]
    return np.sqrt(total / ((end - start) * dt))  # type: ignore[no-any-return]


def qv_state_detector(
    increments: npt.ArrayLike, sigma: npt.ArrayLike, dt: float, window: Optional[int] = None
) -> IntArray:
    """State whose volatility is nearest the realized volatility, one per increment (0-based).

    :param increments: return increments, shape (n,) or (M, n)
    :param sigma: per-state volatilities, pairwise distinct
    :param dt: grid step
    :param window: number of trailing increments, default max(10, round(n / 200))
    """
    levels = np.asarray(sigma, dtype=float)
    if np.unique(levels).size != levels.size:
        raise ConfigError(msgs.INDISTINGUISHABLE_STATES_MSG)
    steps = np.asarray(increments, dtype=float)
    if window is None:
        window = default_window(steps.shape[-1])
    vol = realized_volatility(steps, dt, window)
    return np.abs(vol[..., None] - levels).argmin(axis=-1)


def map_states(yhat: npt.ArrayLike) -> IntArray:
    return np.asarray(yhat).argmax(axis=-1)


def state_accuracy(estimated: npt.ArrayLike, true: npt.ArrayLike) -> float:
    return float(np.mean(np.asarray(estimated) == np.asarray(true)))
