import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, IntArray, one_hot
from regimelab.chain._rate_matrix import RateMatrix, as_rate_matrix, stationary_distribution

LOGGER = logging.getLogger("regimelab")

InitialState = Union[None, int, npt.ArrayLike]


@dataclass(frozen=True, eq=False)
class ChainPath:
    """Exact path of a chain on [0, horizon]: the state ``states[i]`` holds on ``[jump_times[i], jump_times[i+1])``.

    States are 0-based indices. Paths are right-continuous, so at a jump time the post-jump state holds.
    """

    jump_times: FloatArray
    states: IntArray
    horizon: float

    @property
    def jumps(self) -> int:
        return len(self.jump_times) - 1

    def states_at(self, times: npt.ArrayLike) -> IntArray:
        t = np.asarray(times, dtype=float)
        if np.any(t < 0) or np.any(t > self.horizon):
            bad = t[(t < 0) | (t > self.horizon)].flat[0]
            raise ConfigError(msgs.TIME_OUT_OF_RANGE_MSG.format(bad, self.horizon))
        segment = np.searchsorted(self.jump_times, t, side="right") - 1
        return self.states[segment]

    def indicators(self, times: npt.ArrayLike, d: int) -> FloatArray:
        """Unit-vector encoding e_{Y_t} of the states at ``times``."""
        return one_hot(self.states_at(times), d)

    def occupation_times(self, d: int) -> FloatArray:
        durations = np.diff(np.append(self.jump_times, self.horizon))
        return np.bincount(self.states, weights=durations, minlength=d)


def state_at(path: ChainPath, t: float) -> int:
    return int(path.states_at(t))


def initial_distribution(q: Union[RateMatrix, npt.ArrayLike], initial: InitialState) -> FloatArray:
    """Distribution of Y_0: nu when ``initial`` is None, a unit vector for a state index, else the given weights."""
    rates = as_rate_matrix(q)
    if initial is None:
        return stationary_distribution(rates)
    if isinstance(initial, (int, np.integer)):
        if not 0 <= initial < rates.d:
            raise ConfigError(msgs.INVALID_INITIAL_STATE_MSG.format(int(initial) + 1, rates.d))
        return one_hot(int(initial), rates.d)
    weights = np.asarray(initial, dtype=float)
    if weights.shape != (rates.d,) or np.any(weights < 0) or weights.sum() <= 0:
        raise ConfigError(msgs.NOT_ON_SIMPLEX_MSG)
    return weights / weights.sum()  # type: ignore[no-any-return]


def simulate_chain(
    q: Union[RateMatrix, npt.ArrayLike], horizon: float, rng: np.random.Generator, initial: InitialState = None
) -> ChainPath:
    """Exact (Gillespie) path on [0, horizon].

    Holding time in state i is Exponential(-Q_ii); the next state is j with probability Q_ij / (-Q_ii).

    :param q: rate matrix
    :param horizon: length of the path in years
    :param rng: stream the path is drawn from
    :param initial: None to draw Y_0 from the stationary distribution, a 0-based state index, or weights
    :returns: the path
    """
    rates = as_rate_matrix(q).values
    if horizon <= 0:
        raise ConfigError(msgs.INVALID_HORIZON_MSG.format(horizon))
    d = rates.shape[0]
    state = int(rng.choice(d, p=initial_distribution(rates, initial)))
    times, states = [0.0], [state]
    exit_rates = -np.diag(rates)
    t = 0.0
    while exit_rates[state] > 0:
        t += rng.exponential(1.0 / exit_rates[state])
        if t >= horizon:
            break
        weights = np.clip(rates[state], 0.0, None)
        weights[state] = 0.0
        state = int(rng.choice(d, p=weights / weights.sum()))
        times.append(t)
        states.append(state)
    return ChainPath(np.array(times), np.array(states, dtype=np.int64), float(horizon))
