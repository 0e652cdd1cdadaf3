import logging
import os
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import _msgs as msgs
from ._command_args_parsing import extract_args, option_name
from ._commands import SUPPORTED_COMMANDS, Signature
from ._config import ExperimentConfig, parse_config
from ._helpers import ConfigError
from ._io import OutputWriter
from .commands_mixins import (
    ConvergenceCommandsMixin,
    FilterCommandsMixin,
    PortfolioCommandsMixin,
    SimulateCommandsMixin,
    StylizedCommandsMixin,
)

LOGGER = logging.getLogger("regimelab")

OUTPUT_DIR_ENV = "REGIMELAB_OUTPUT_DIR"

CommandFunc = Callable[[ExperimentConfig, OutputWriter], Dict[str, Any]]


def _option_overrides(expected: Tuple[str, ...], values: Sequence[Any]) -> Dict[str, List[Any]]:
    """Config directives set by trailing subcommand options."""
    overrides: Dict[str, List[Any]] = dict()
    for spec, value in zip(expected, values):
        name = option_name(spec)
        if value is None or value is False:
            continue
        if name == "noclamp":
            overrides["clamp"] = ["none"]
        elif name == "autocov":
            overrides["autocov_t"], overrides["autocov_s"] = [value[0]], [value[1]]
        else:
            overrides[name] = list(value) if isinstance(value, list) else [value]
    return overrides


class BaseLab:
    """Resolves a config, checks the preconditions of a subcommand, runs it and records what it wrote."""

    def __init__(self, output_dir: Union[None, str, Path] = None) -> None:
        self.output_dir = Path(output_dir or os.environ.get(OUTPUT_DIR_ENV) or "results")

    def _name_to_func(self, cmd_name: str) -> Tuple[CommandFunc, Signature]:
        """Get the signature and the method from the subcommand name."""
        sig = SUPPORTED_COMMANDS.get(cmd_name.lower())
        if sig is None:
            raise ConfigError(msgs.UNKNOWN_COMMAND_MSG.format(cmd_name))
        func: CommandFunc = getattr(self, sig.func_name)
        return func, sig

    def resolve(
        self, cmd_name: str, config_path: Union[str, Path], *args: str, overrides: Optional[Mapping[str, Any]] = None
    ) -> Tuple[ExperimentConfig, Dict[str, List[Any]]]:
        """Parse the config with flag ``overrides`` and trailing options applied, then validate it for the command."""
        _, sig = self._name_to_func(cmd_name)
        values, _ = extract_args(args, sig.command_args, exception=msgs.UNEXPECTED_OPTION_MSG)
        merged = {key: [value] for key, value in (overrides or {}).items() if value is not None}
        merged.update(_option_overrides(sig.command_args, values))
        config = parse_config(config_path, overrides=merged)
        config.validate(sig.name)
        return config, merged

    def execute_command(
        self, cmd_name: str, config_path: Union[str, Path], *args: str, overrides: Optional[Mapping[str, Any]] = None
    ) -> Dict[str, Any]:
        func, sig = self._name_to_func(cmd_name)
        config, merged = self.resolve(sig.name, config_path, *args, overrides=overrides)
        LOGGER.debug(f"running {sig.name} with seed {config.seed}, {config.replications} replication(s)")
        writer = OutputWriter(self.output_dir)
        summary = func(config, writer)
        writer.write_json("summary.json", summary)
        writer.write_manifest(sig.name, config.digest(), config.seed, merged)
        return summary


class RegimeLab(
    BaseLab,
    SimulateCommandsMixin,
    FilterCommandsMixin,
    PortfolioCommandsMixin,
    StylizedCommandsMixin,
    ConvergenceCommandsMixin,
):
    pass
