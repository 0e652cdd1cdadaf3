from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from regimelab.models import Grid, RegimeParams

THREE_STATE_Q = [[-7.0, 4.0, 3.0], [2.0, -4.0, 2.0], [3.0, 5.0, -8.0]]


@pytest.fixture
def three_state() -> RegimeParams:
    """The bull/calm/crash market shipped in configs/three_state.conf."""
    return RegimeParams.create(THREE_STATE_Q, [1.0, 0.0, -2.0], [0.10, 0.15, 0.25])


@pytest.fixture
def asymmetric() -> RegimeParams:
    return RegimeParams.create(THREE_STATE_Q, [0.5, 0.0, -1.0], [0.05, 0.08, 0.12])


@pytest.fixture
def two_state() -> RegimeParams:
    return RegimeParams.create([[-1.0, 1.0], [2.0, -2.0]], [0.4, -0.6], [0.12, 0.30])


@pytest.fixture
def daily_grid() -> Grid:
    return Grid(1.0, 250)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def configs_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[[str], Path]:
    def factory(text: str, name: str = "experiment.conf") -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return factory
