import json
import logging
import math
import platform
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

import numpy as np
import pandas as pd
import scipy
import statsmodels

from . import _msgs as msgs
from ._helpers import OutputError

LOGGER = logging.getLogger("regimelab")


def jsonable(value: Any) -> Any:
    """Plain-python copy of ``value``; numpy types become builtins and nan/inf become None."""
    if isinstance(value, Mapping):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def versions() -> Dict[str, str]:
    from . import __version__

    return {
        "regimelab": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
        "statsmodels": statsmodels.__version__,
        "python": platform.python_version(),
    }


class OutputWriter:
    """Writes the files of one run into ``directory``, in call order, and remembers their names."""

    def __init__(self, directory: Union[str, Path]) -> None:
        self.directory = Path(directory)
        self.files: List[str] = []

    def _target(self, name: str) -> Path:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OutputError(msgs.OUTPUT_FAILED_MSG.format(self.directory, exc.strerror or exc))
        return self.directory / name

    def _record(self, name: str, path: Path) -> Path:
        if name not in self.files:
            self.files.append(name)
        LOGGER.info(f"wrote {path}")
        return path

    def write_frame(self, name: str, frame: pd.DataFrame) -> Path:
        path = self._target(name)
        try:
            frame.to_csv(path, index=False)
        except OSError as exc:
            raise OutputError(msgs.OUTPUT_FAILED_MSG.format(path, exc.strerror or exc))
        return self._record(name, path)

    def write_json(self, name: str, payload: Any) -> Path:
        path = self._target(name)
        try:
            path.write_text(json.dumps(jsonable(payload), indent=2, sort_keys=True) + "\n")
        except OSError as exc:
            raise OutputError(msgs.OUTPUT_FAILED_MSG.format(path, exc.strerror or exc))
        return self._record(name, path)

    def write_manifest(self, subcommand: str, digest: str, seed: int, options: Mapping[str, Any]) -> Path:
        """Last file of a run: what was run, with which settings and library versions, and what it wrote."""
        manifest = {
            "subcommand": subcommand,
            "config_digest": digest,
            "seed": seed,
            "options": dict(options),
            "versions": versions(),
            "files": list(self.files),
        }
        return self.write_json("manifest.json", manifest)
