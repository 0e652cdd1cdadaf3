from ._config import ExperimentConfig, parse_config
from ._helpers import (
    ConeError,
    ConfigError,
    GridError,
    NumericalError,
    OutputError,
    RegimeError,
    StabilityError,
)
from ._lab import RegimeLab

try:
    from importlib import metadata
except ImportError:  # for Python < 3.8
    import importlib_metadata as metadata  # type: ignore
try:
    __version__ = metadata.version("regimelab")
except metadata.PackageNotFoundError:
    __version__ = "0.0.0"
__license__ = "BSD-3-Clause"

__all__ = [
    "ExperimentConfig",
    "RegimeLab",
    "parse_config",
    "RegimeError",
    "ConfigError",
    "GridError",
    "NumericalError",
    "StabilityError",
    "ConeError",
    "OutputError",
]
