"""Experiment configuration files.

One directive per line, ``key value ...``, with ``#`` starting a comment. ``rate_row`` is given once per row of
the rate matrix. Units: ``horizon``, ``autocov_t``, ``autocov_s`` and ``mse_time`` in years, rates and drifts
per year, volatilities per square-root year.
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Type, Union

import numpy as np

from . import _msgs as msgs
from ._commands import SUPPORTED_COMMANDS, ConfigType, Float, ModelKind, PositiveFloat, PositiveInt, Seed, Transform
from ._helpers import ConfigError, GridError
from .chain import RateMatrix
from .filters import default_window
from .models import Drivers, Grid, RegimeParams, simulate_drivers
from .stylized import MIN_MSE_REPLICATIONS

LOGGER = logging.getLogger("regimelab")

DEFAULT_CONSTANTS = (0.0, 0.25, 0.5, 1.0)
DEFAULT_COARSE_STEPS = (64, 256, 1024, 4096)


@dataclass(frozen=True)
class Directive:
    """How a config key is read.

    :param converter: converter applied to every value
    :param arity: number of values, None for one or more
    :param repeatable: the key may appear on several lines, values are collected in order
    :param keyword: a single literal token standing for a value, e.g. ``clamp none``
    """

    converter: Type[ConfigType]
    arity: Optional[int] = 1
    repeatable: bool = False
    keyword: Optional[Tuple[str, Any]] = None

    def read(self, where: str, key: str, tokens: Sequence[str]) -> Any:
        if self.keyword is not None and len(tokens) == 1 and tokens[0].lower() == self.keyword[0]:
            return self.keyword[1]
        if (self.arity is None and not tokens) or (self.arity is not None and len(tokens) != self.arity):
            raise ConfigError(msgs.WRONG_ARITY_MSG.format(where, key, self.arity or "1+", len(tokens)))
        try:
            values = [self.converter.decode(token) for token in tokens]
        except ConfigError as exc:
            raise ConfigError(msgs.BAD_VALUE_MSG.format(where, key, exc.value))
        return values[0] if self.arity == 1 else values


DIRECTIVES: Dict[str, Directive] = {
    "model": Directive(ModelKind),
    "rate_row": Directive(Float, None, repeatable=True),
    "mu": Directive(Float, None),
    "sigma": Directive(Float, None),
    "sigma0": Directive(Float),
    "horizon": Directive(PositiveFloat),
    "steps": Directive(PositiveInt),
    "seed": Directive(Seed),
    "replications": Directive(PositiveInt),
    "initial_state": Directive(PositiveInt, keyword=("stationary", None)),
    "window": Directive(PositiveInt),
    "lags": Directive(PositiveInt),
    "transform": Directive(Transform),
    "bins": Directive(PositiveInt),
    "clamp": Directive(Float, 2, keyword=("none", None)),
    "wealth": Directive(PositiveFloat),
    "fine_steps": Directive(PositiveInt),
    "coarse_steps": Directive(PositiveInt, None),
    "autocov_t": Directive(Float),
    "autocov_s": Directive(Float),
    "mse_time": Directive(PositiveFloat),
    "leverage_window": Directive(PositiveInt),
    "constants": Directive(Float, None),
    "workers": Directive(PositiveInt),
}


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """Validated experiment settings. ``initial_state`` is 0-based, None for the stationary law."""

    model: str
    params: RegimeParams
    grid: Grid
    seed: int = 0
    replications: int = 1
    initial_state: Optional[int] = None
    window: Optional[int] = None
    lags: int = 20
    transform: str = "square"
    bins: int = 50
    clamp: Optional[Tuple[float, float]] = (0.0, 1.0)
    wealth: float = 1.0
    fine_steps: int = 16384
    coarse_steps: Tuple[int, ...] = DEFAULT_COARSE_STEPS
    autocov: Optional[Tuple[float, float]] = None
    mse_time: Optional[float] = None
    leverage_window: int = 20
    constants: Tuple[float, ...] = DEFAULT_CONSTANTS
    workers: int = 1

    @property
    def detector_window(self) -> int:
        return self.window if self.window is not None else default_window(self.grid.steps)

    def drivers(self, grid: Optional[Grid] = None) -> Drivers:
        """Chain paths and Brownian increments of all configured replications."""
        grid = grid or self.grid
        return simulate_drivers(grid, self.params.rates, self.seed, self.replications, self.initial_state)

    def validate(self, subcommand: str) -> None:
        """Check the preconditions of ``subcommand``; raise with every failure found."""
        signature = SUPPORTED_COMMANDS.get(subcommand)
        if signature is None:
            raise ConfigError(msgs.UNKNOWN_COMMAND_MSG.format(subcommand))
        failures: List[str] = []
        grid_failures: List[str] = []
        sigma = self.params.sigma
        if msgs.FLAG_NEEDS_SIGMA in signature.flags and sigma is None:
            failures.append(msgs.MISSING_SIGMA_MSG.format(subcommand))
        if msgs.FLAG_DISTINCT_SIGMA in signature.flags and sigma is not None and np.unique(sigma).size < sigma.size:
            failures.append(msgs.INDISTINGUISHABLE_STATES_MSG)
        if msgs.FLAG_REPLICATED in signature.flags and self.replications < 2:
            failures.append(msgs.TOO_FEW_REPLICATIONS_MSG.format(subcommand, 2, self.replications))
        if subcommand == "stylized":
            if sigma is None and (self.autocov is not None or self.mse_time is not None):
                failures.append(msgs.MISSING_SIGMA_MSG.format("fb"))
            if self.grid.steps <= self.lags + 2:
                failures.append(msgs.SERIES_TOO_SHORT_MSG.format(self.grid.steps, self.lags + 2))
            if self.autocov is not None:
                t, s = self.autocov
                if not t + self.grid.dt < s:
                    failures.append(msgs.AUTOCOV_ORDER_MSG.format(t, self.grid.dt, s))
            if self.mse_time is not None:
                if self.replications < MIN_MSE_REPLICATIONS:
                    failures.append(
                        msgs.TOO_FEW_REPLICATIONS_MSG.format("mse_time", MIN_MSE_REPLICATIONS, self.replications)
                    )
                if self.mse_time > self.grid.horizon:
                    failures.append(msgs.TIME_OUT_OF_RANGE_MSG.format(self.mse_time, self.grid.horizon))
        if subcommand == "converge":
            for n in self.coarse_steps:
                if self.fine_steps % n:
                    grid_failures.append(msgs.GRID_DIVISIBILITY_MSG.format(self.fine_steps, n))
            exit_step = self.params.rates.max_exit_rate * self.grid.horizon / self.fine_steps
            if exit_step >= 1:
                failures.append(msgs.UNSTABLE_GRID_MSG.format(exit_step))
        failures.extend(grid_failures)
        if failures:
            error = GridError if grid_failures else ConfigError
            raise error(msgs.CONFIG_INVALID_MSG.format(len(failures)), failures)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready echo of the resolved settings, states 1-based."""
        params = self.params
        return {
            "model": self.model,
            "rates": params.rates.values.tolist(),
            "mu": params.mu.tolist(),
            "sigma": None if params.sigma is None else params.sigma.tolist(),
            "sigma0": params.sigma0,
            "stationary": params.stationary.tolist(),
            "horizon": self.grid.horizon,
            "steps": self.grid.steps,
            "seed": self.seed,
            "replications": self.replications,
            "initial_state": "stationary" if self.initial_state is None else self.initial_state + 1,
            "window": self.detector_window,
            "lags": self.lags,
            "transform": self.transform,
            "bins": self.bins,
            "clamp": None if self.clamp is None else list(self.clamp),
            "wealth": self.wealth,
            "fine_steps": self.fine_steps,
            "coarse_steps": list(self.coarse_steps),
            "autocov": None if self.autocov is None else list(self.autocov),
            "mse_time": self.mse_time,
            "leverage_window": self.leverage_window,
            "constants": list(self.constants),
            "workers": self.workers,
        }

    def digest(self) -> str:
        """sha256 of the resolved settings; ``workers`` is left out as it never changes results."""
        settings = self.to_dict()
        del settings["workers"]
        return hashlib.sha256(json.dumps(settings, sort_keys=True).encode()).hexdigest()


def _read_lines(
    lines: Sequence[str], overrides: Mapping[str, Sequence[str]], failures: List[str]
) -> Dict[str, Any]:
    values: Dict[str, Any] = dict()
    seen: Dict[str, str] = dict()
    entries = [(f"line {number}", line.split("#", 1)[0].split()) for number, line in enumerate(lines, 1)]
    entries.extend((f"option {key}", [key, *tokens]) for key, tokens in overrides.items())
    for where, tokens in entries:
        if not tokens:
            continue
        key = tokens[0].lower()
        directive = DIRECTIVES.get(key)
        if directive is None:
            failures.append(msgs.UNKNOWN_KEY_MSG.format(where, tokens[0]))
            continue
        overriding = where.startswith("option")
        if key in seen and not directive.repeatable and not overriding:
            failures.append(msgs.DUPLICATE_KEY_MSG.format(where, key, seen[key]))
            continue
        try:
            value = directive.read(where, key, tokens[1:])
        except ConfigError as exc:
            failures.append(exc.value)
            continue
        seen.setdefault(key, where)
        if directive.repeatable:
            values.setdefault(key, []).append(value)
        else:
            values[key] = value
    return values


def _collect(failures: List[str], factory: Any) -> Any:
    try:
        return factory()
    except ConfigError as exc:
        failures.extend(exc.failures)
        return None


def _pair(values: Mapping[str, Any], first: str, second: str, failures: List[str]) -> Optional[Tuple[float, float]]:
    if first not in values and second not in values:
        return None
    if first not in values or second not in values:
        failures.append(msgs.INCOMPLETE_PAIR_MSG.format(first, second))
        return None
    return float(values[first]), float(values[second])


def _build(values: Dict[str, Any], failures: List[str]) -> Optional[ExperimentConfig]:
    rows = values.get("rate_row", [])
    for key in ("rate_row", "mu"):
        if key not in values:
            failures.append(msgs.MISSING_KEY_MSG.format(key))
    rates = None
    if rows:
        lengths = sorted({len(row) for row in rows})
        if len(lengths) > 1:
            failures.append(msgs.RAGGED_RATES_MSG.format(lengths))
        else:
            rates = _collect(failures, lambda: RateMatrix(np.array(rows, dtype=float)))
    grid = _collect(failures, lambda: Grid(values.get("horizon", 1.0), values.get("steps", 250)))
    params = None
    if rates is not None and "mu" in values:
        params = _collect(
            failures, lambda: RegimeParams(rates, np.array(values["mu"]), values.get("sigma"), values.get("sigma0"))
        )
    model = values.get("model", "fb")
    if model != "hmm" and "sigma" not in values:
        failures.append(msgs.MISSING_SIGMA_MSG.format(model))
    if params is not None and grid is not None:
        exit_step = params.rates.max_exit_rate * grid.dt
        if exit_step >= 1:
            failures.append(msgs.UNSTABLE_GRID_MSG.format(exit_step))
    initial = values.get("initial_state")
    if params is not None and initial is not None and initial > params.d:
        failures.append(msgs.INVALID_INITIAL_STATE_MSG.format(initial, params.d))
    clamp = values.get("clamp", (0.0, 1.0))
    if clamp is not None:
        clamp = (float(clamp[0]), float(clamp[1]))
        if clamp[0] > clamp[1]:
            failures.append(msgs.INVALID_CLAMP_MSG.format(*clamp))
    autocov = _pair(values, "autocov_t", "autocov_s", failures)
    if failures or params is None or grid is None:
        return None
    return ExperimentConfig(
        model=model,
        params=params,
        grid=grid,
        seed=values.get("seed", 0),
        replications=values.get("replications", 1),
        initial_state=None if initial is None else initial - 1,
        window=values.get("window"),
        lags=values.get("lags", 20),
        transform=values.get("transform", "square"),
        bins=values.get("bins", 50),
        clamp=clamp,
        wealth=values.get("wealth", 1.0),
        fine_steps=values.get("fine_steps", 16384),
        coarse_steps=tuple(values.get("coarse_steps", DEFAULT_COARSE_STEPS)),
        autocov=autocov,
        mse_time=values.get("mse_time"),
        leverage_window=values.get("leverage_window", 20),
        constants=tuple(values.get("constants", DEFAULT_CONSTANTS)),
        workers=values.get("workers", 1),
    )


def parse_config(
    path: Union[None, str, Path] = None,
    text: Optional[str] = None,
    overrides: Optional[Mapping[str, Sequence[Any]]] = None,
) -> ExperimentConfig:
    """Read and validate a config file (or its ``text``).

    :param path: config file
    :param text: config contents, used instead of reading ``path``
    :param overrides: key => values applied after the file, e.g. ``{"seed": [7]}``; they replace file values
    :raises ConfigError: listing every parse and validation failure
    """
    if text is None:
        if path is None:
            raise ConfigError(msgs.MISSING_KEY_MSG.format("config file"))
        try:
            text = Path(path).read_text()
        except OSError:
            raise ConfigError(msgs.CONFIG_NOT_FOUND_MSG.format(path))
    failures: List[str] = []
    tokens = {key: [str(value) for value in values] for key, values in (overrides or {}).items()}
    values = _read_lines(text.splitlines(), tokens, failures)
    config = _build(values, failures)
    if config is None:
        raise ConfigError(msgs.CONFIG_INVALID_MSG.format(len(failures)), failures)
    LOGGER.debug(f"parsed config for model {config.model}, d={config.params.d}, n={config.grid.steps}")
    return config


