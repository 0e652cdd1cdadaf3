from typing import Any, List, Optional, Union

import numpy as np
import numpy.typing as npt
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from regimelab import _msgs as msgs
from regimelab._helpers import ConfigError, FloatArray, StabilityError

ROW_SUM_TOLERANCE = 1e-12


class RateMatrix:
    """Generator Q of an irreducible continuous-time Markov chain, rates per year.

    Validated on construction: square, finite, off-diagonal entries >= 0, rows summing to 0 and a strongly
    connected transition graph. The stored matrix is read-only.
    """

    __slots__ = ("_values",)

    def __init__(self, values: npt.ArrayLike) -> None:
        q = np.array(values, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ConfigError(msgs.NOT_SQUARE_MSG.format(q.shape))
        failures = self.validation_failures(q)
        if failures:
            raise ConfigError(failures[0], failures)
        q.setflags(write=False)
        self._values = q

    @staticmethod
    def validation_failures(q: FloatArray) -> List[str]:
        """Every invariant ``q`` violates, rows numbered from 1."""
        if q.shape[0] == 0:
            return [msgs.EMPTY_CHAIN_MSG]
        if not np.all(np.isfinite(q)):
            return [msgs.NONFINITE_RATE_MSG]
        failures = []
        off_diagonal = q - np.diag(np.diag(q))
        for row in np.flatnonzero((off_diagonal < 0).any(axis=1)):
            failures.append(msgs.NEGATIVE_RATE_MSG.format(row + 1))
        sums = q.sum(axis=1)
        for row in np.flatnonzero(np.abs(sums) > ROW_SUM_TOLERANCE):
            failures.append(msgs.ROW_SUM_MSG.format(row + 1, sums[row]))
        if not failures and not _is_irreducible(off_diagonal):
            failures.append(msgs.REDUCIBLE_CHAIN_MSG)
        return failures

    @property
    def values(self) -> FloatArray:
        return self._values

    @property
    def d(self) -> int:
        return int(self._values.shape[0])

    @property
    def max_exit_rate(self) -> float:
        return float(np.max(-np.diag(self._values)))

    def check_step(self, dt: float) -> None:
        """Reject steps for which I + dt*Q^T can leave the positive cone."""
        if dt * self.max_exit_rate >= 1.0:
            raise StabilityError(msgs.UNSTABLE_GRID_MSG.format(dt * self.max_exit_rate))

    def __array__(self, dtype: Any = None, copy: Optional[bool] = None) -> FloatArray:
        return np.array(self._values, dtype=dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RateMatrix):
            return NotImplemented
        return bool(np.array_equal(self._values, other._values))

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def __repr__(self) -> str:
        return f"RateMatrix({self._values.tolist()})"


def _is_irreducible(off_diagonal: FloatArray) -> bool:
    count, _ = connected_components(csr_matrix(off_diagonal > 0), directed=True, connection="strong")
    return bool(count == 1)


def as_rate_matrix(q: Union[RateMatrix, npt.ArrayLike]) -> RateMatrix:
    return q if isinstance(q, RateMatrix) else RateMatrix(q)


def stationary_distribution(q: Union[RateMatrix, npt.ArrayLike]) -> FloatArray:
    """Unique probability vector nu with nu^T Q = 0."""
    rates = as_rate_matrix(q).values
    d = rates.shape[0]
    system = np.vstack([rates.T, np.ones((1, d))])
    rhs = np.zeros(d + 1)
    rhs[-1] = 1.0
    nu, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    nu = np.clip(nu, 0.0, None)
    return nu / nu.sum()  # type: ignore[no-any-return]


def transition_matrix(q: Union[RateMatrix, npt.ArrayLike], dt: npt.ArrayLike) -> FloatArray:
    """exp(Q*dt) for a scalar step or for an array of steps (stacked along the leading axes).

    Rows are clamped to nonnegative entries and renormalized.
    """
    rates = as_rate_matrix(q).values
    steps = np.asarray(dt, dtype=float)
    if np.any(steps < 0):
        raise ConfigError(msgs.NEGATIVE_DT_MSG.format(steps.min()))
    p = scipy.linalg.expm(rates * steps[..., None, None])
    p = np.clip(p, 0.0, None)
    return p / p.sum(axis=-1, keepdims=True)  # type: ignore[no-any-return]
