import dataclasses
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np
import numpy.typing as npt

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray
from regimelab.chain import RateMatrix, as_rate_matrix, stationary_distribution

MODEL_KINDS = ("hmm", "msm", "fb")


@dataclass(frozen=True)
class Grid:
    """Uniform grid t_k = k*T/n on [0, T], T in years."""

    horizon: float
    steps: int

    def __post_init__(self) -> None:
        failures = []
        if not self.horizon > 0:
            failures.append(msgs.INVALID_HORIZON_MSG.format(self.horizon))
        if self.steps < 1:
            failures.append(msgs.INVALID_STEPS_MSG.format(self.steps))
        if failures:
            raise ConfigError(failures[0], failures)

    @property
    def dt(self) -> float:
        return self.horizon / self.steps

    @property
    def times(self) -> FloatArray:
        return np.linspace(0.0, self.horizon, self.steps + 1)

    def coarsen(self, factor: int) -> "Grid":
        if factor < 1 or self.steps % factor:
            raise ConfigError(msgs.INVALID_COARSEN_MSG.format(factor, self.steps))
        return Grid(self.horizon, self.steps // factor)


@dataclass(frozen=True, eq=False)
class RegimeParams:
    """Rate matrix, per-state drifts mu (1/year) and volatilities sigma (1/sqrt(year)).

    ``sigma0`` is the constant HMM volatility; when absent it defaults to sigma^T nu.
    """

    rates: RateMatrix
    mu: FloatArray
    sigma: Optional[FloatArray] = None
    sigma0: Optional[float] = None
    stationary: FloatArray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        rates = as_rate_matrix(self.rates)
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "mu", _frozen_vector(self.mu))
        if self.sigma is not None:
            object.__setattr__(self, "sigma", _frozen_vector(self.sigma))
        if self.sigma0 is not None:
            object.__setattr__(self, "sigma0", float(self.sigma0))
        failures = self.validation_failures()
        if failures:
            raise ConfigError(failures[0], failures)
        object.__setattr__(self, "stationary", stationary_distribution(rates))

    @classmethod
    def create(
        cls,
        q: Union[RateMatrix, npt.ArrayLike],
        mu: npt.ArrayLike,
        sigma: Optional[npt.ArrayLike] = None,
        sigma0: Optional[float] = None,
    ) -> "RegimeParams":
        return cls(as_rate_matrix(q), np.asarray(mu, dtype=float), None if sigma is None else np.asarray(sigma), sigma0)

    def validation_failures(self) -> List[str]:
        failures = []
        d = self.rates.d
        if self.mu.shape != (d,):
            failures.append(msgs.DIMENSION_MISMATCH_MSG.format("mu", self.mu.size, d))
        if self.sigma is None and self.sigma0 is None:
            failures.append(msgs.MISSING_VOLATILITY_MSG)
        if self.sigma is not None:
            if self.sigma.shape != (d,):
                failures.append(msgs.DIMENSION_MISMATCH_MSG.format("sigma", self.sigma.size, d))
            if not np.all(self.sigma > 0):
                failures.append(msgs.NONPOSITIVE_SIGMA_MSG.format(self.sigma.tolist()))
        if self.sigma0 is not None and not self.sigma0 > 0:
            failures.append(msgs.NONPOSITIVE_SIGMA_MSG.format(self.sigma0))
        return failures

    @property
    def d(self) -> int:
        return self.rates.d

    @property
    def volatility0(self) -> float:
        """Constant HMM volatility: sigma0 if given, else the stationary average sigma^T nu."""
        if self.sigma0 is not None:
            return self.sigma0
        assert self.sigma is not None
        return float(self.sigma @ self.stationary)

    def require_sigma(self, kind: str) -> FloatArray:
        if self.sigma is None:
            raise ConfigError(msgs.MISSING_SIGMA_MSG.format(kind))
        return self.sigma

    def equal_variance(self) -> "RegimeParams":
        """HMM counterpart with sigma0 = sigma^T nu."""
        return dataclasses.replace(self, sigma0=float(self.require_sigma("hmm") @ self.stationary))

    def check_grid(self, grid: Grid) -> None:
        self.rates.check_step(grid.dt)


def _frozen_vector(values: npt.ArrayLike) -> FloatArray:
    vector = np.array(values, dtype=float).reshape(-1)
    vector.setflags(write=False)
    return vector
