from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray
from regimelab.filters import run_fb_filter, run_hmm_filter, run_msm_filter
from regimelab.models import MODEL_KINDS, PathBundle, RegimeParams

Clamp = Optional[Tuple[float, float]]


def log_optimal_fraction(
    model_kind: str, state_info: npt.ArrayLike, mu: npt.ArrayLike, sigma: npt.ArrayLike
) -> Union[float, FloatArray]:
    """Merton-type fraction maximizing expected log wealth, r = 0.

    - hmm: mu^T Y / sigma0^2 with Y the filter and ``sigma`` the scalar sigma0
    - msm: mu_i / sigma_i^2 for a state index i; for a probability vector Y (a discrete MSM filter) the
      fraction mu^T Y / (sigma^T Y)^2
    - fb: mu^T Y / (sigma^T Y)^2

    Works elementwise over leading axes of ``state_info``.
    """
    kind = model_kind.lower()
    drift = np.asarray(mu, dtype=float)
    vol = np.asarray(sigma, dtype=float)
    info = np.asarray(state_info)
    if kind == "hmm":
        result = (info @ drift) / vol**2
    elif kind == "msm" and np.issubdtype(info.dtype, np.integer):
        result = drift[info] / vol[info] ** 2
    elif kind in ("msm", "fb"):
        result = (info @ drift) / (info @ vol) ** 2
    else:
        raise ConfigError(msgs.UNKNOWN_MODEL_MSG.format(model_kind))
    return float(result) if np.ndim(result) == 0 else result


@dataclass(frozen=True, eq=False)
class Strategy:
    """Fractions pi_k held over (t_k, t_{k+1}], shape (M, n) or broadcastable to it.

    When ``clamp`` is set the stored fractions are already clipped to it.
    """

    name: str
    model_kind: str
    fractions: FloatArray
    clamp: Clamp = None

    def __post_init__(self) -> None:
        fractions = np.asarray(self.fractions, dtype=float)
        if self.clamp is not None:
            low, high = self.clamp
            if low > high:
                raise ConfigError(msgs.INVALID_CLAMP_MSG.format(low, high))
            fractions = np.clip(fractions, low, high)
        object.__setattr__(self, "fractions", fractions)

    @classmethod
    def constant(cls, value: float, clamp: Clamp = None, name: Optional[str] = None) -> "Strategy":
        return cls(name or f"constant_{value:g}", "constant", np.asarray(value, dtype=float), clamp)


def _filter_fractions(kind: str, params: RegimeParams, bundle: PathBundle) -> FloatArray:
    """Fractions of ``kind``'s strategy computed from the observed returns alone."""
    if kind == "hmm":
        yhat = run_hmm_filter(bundle.increments, params, bundle.grid)
        fractions = log_optimal_fraction("hmm", yhat, params.mu, params.volatility0)
    elif kind == "msm":
        yhat = run_msm_filter(bundle.increments, params, bundle.grid)
        fractions = log_optimal_fraction("msm", yhat, params.mu, params.require_sigma("msm"))
    else:
        yhat, _ = run_fb_filter(bundle.increments, params, bundle.grid)
        fractions = log_optimal_fraction("fb", yhat, params.mu, params.require_sigma("fb"))
    return np.asarray(fractions)[:, :-1]


def own_strategy(kind: str, params: RegimeParams, bundle: PathBundle, clamp: Clamp = None) -> Strategy:
    """The model's log-optimal strategy on its own paths; the MSM one reads the true state."""
    if kind == "msm":
        fractions = log_optimal_fraction("msm", bundle.chain_states[:, :-1], params.mu, params.require_sigma("msm"))
    elif kind == "hmm":
        fractions = log_optimal_fraction("hmm", bundle.filter[:, :-1], params.mu, params.volatility0)
    else:
        fractions = log_optimal_fraction("fb", bundle.filter[:, :-1], params.mu, params.require_sigma("fb"))
    return Strategy("log_optimal", kind, np.asarray(fractions), clamp)


def stationary_fraction(params: RegimeParams) -> float:
    """Merton fraction at the stationary mean: mu^T nu over the squared stationary volatility.

    The volatility is sigma^T nu when a switching sigma is given and sigma0 otherwise.
    """
    vol = params.volatility0 if params.sigma is None else float(params.sigma @ params.stationary)
    return float(params.mu @ params.stationary) / vol**2


def strategy_set(
    kind: str,
    params: RegimeParams,
    bundle: PathBundle,
    constants: Sequence[float] = (0.0, 0.25, 0.5, 1.0),
    clamp: Clamp = None,
) -> List[Strategy]:
    """Own strategy first, then constants, the stationary Merton fraction and the other models' strategies."""
    strategies = [own_strategy(kind, params, bundle, clamp)]
    strategies.extend(Strategy.constant(value, clamp) for value in constants)
    strategies.append(Strategy.constant(stationary_fraction(params), clamp, name="stationary"))
    for other in MODEL_KINDS:
        if other == kind or (other != "hmm" and params.sigma is None):
            continue
        strategies.append(Strategy(f"{other}_filter", other, _filter_fractions(other, params, bundle), clamp))
    return strategies
