from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]
BoolArray = npt.NDArray[np.bool_]

T = TypeVar("T")

# Purposes of the per-replication streams
CHAIN_STREAM = 0
NOISE_STREAM = 1


class RegimeError(Exception):
    """Exception that will be turned into an exit code and an error report by the CLI."""

    exit_code = 3

    def __init__(self, value: str) -> None:
        assert isinstance(value, str)
        super().__init__(value)
        self.value = value


class ConfigError(RegimeError):
    """Invalid parameters or violated preconditions. Carries every failure found."""

    exit_code = 2

    def __init__(self, value: str, failures: Optional[Sequence[str]] = None) -> None:
        super().__init__(value)
        self.failures: List[str] = list(failures) if failures else [value]


class GridError(ConfigError):
    pass


class NumericalError(RegimeError):
    exit_code = 3


class StabilityError(NumericalError):
    pass


class ConeError(NumericalError):
    pass


class OutputError(RegimeError):
    exit_code = 4


def replication_rng(seed: int, replication: int, purpose: int) -> np.random.Generator:
    """Independent stream for one replication and one purpose.

    Streams are keyed by counter, so adding replications never changes the earlier ones.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(replication, purpose)))


def replicate(
    task: Callable[[int, int], T], replications: int, batch_size: int = 1000, workers: int = 1
) -> List[T]:
    """Run ``task(start, count)`` over consecutive blocks of replications.

    Results come back in block order whatever the number of workers. With ``workers > 1`` the task must be
    picklable (a module-level function or a ``functools.partial`` of one).
    """
    blocks: List[Tuple[int, int]] = [
        (start, min(batch_size, replications - start)) for start in range(0, replications, batch_size)
    ]
    if workers <= 1 or len(blocks) == 1:
        return [task(start, count) for start, count in blocks]
    starts, counts = zip(*blocks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, starts, counts))


def one_hot(states: npt.ArrayLike, d: int) -> FloatArray:
    return np.eye(d)[np.asarray(states, dtype=np.int64)]


def mean_and_stderr(samples: npt.ArrayLike) -> Tuple[float, float]:
    values = np.asarray(samples, dtype=float)
    if values.size == 0:
        return float("nan"), float("nan")
    if values.size == 1:
        return float(values[0]), float("nan")
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(values.size))
