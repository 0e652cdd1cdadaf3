import numpy as np
import pytest

from regimelab import ConfigError
from regimelab.models import Grid, RegimeParams
from test.conftest import THREE_STATE_Q


def test_grid():
    grid = Grid(2.0, 8)
    assert grid.dt == 0.25
    np.testing.assert_allclose(grid.times, np.arange(9) * 0.25)
    assert grid.coarsen(4) == Grid(2.0, 2)
    with pytest.raises(ConfigError, match="does not divide"):
        grid.coarsen(3)


def test_invalid_grid_reports_both_fields():
    with pytest.raises(ConfigError) as ctx:
        Grid(0.0, 0)
    assert len(ctx.value.failures) == 2


def test_volatility0_defaults_to_stationary_average(three_state):
    expected = float(np.array([0.10, 0.15, 0.25]) @ three_state.stationary)
    assert three_state.volatility0 == pytest.approx(expected)
    assert three_state.equal_variance().sigma0 == pytest.approx(expected)
    assert RegimeParams.create(THREE_STATE_Q, [0, 0, 0], sigma0=0.2).volatility0 == 0.2


def test_params_validation():
    with pytest.raises(ConfigError) as ctx:
        RegimeParams.create(THREE_STATE_Q, [1.0, 0.0], [0.1, 0.0, 0.2])
    assert len(ctx.value.failures) == 2
    with pytest.raises(ConfigError, match="either sigma or sigma0"):
        RegimeParams.create(THREE_STATE_Q, [1.0, 0.0, -1.0])
    with pytest.raises(ConfigError, match="needs a volatility vector"):
        RegimeParams.create(THREE_STATE_Q, [1.0, 0.0, -1.0], sigma0=0.1).require_sigma("msm")


def test_params_arrays_read_only(three_state):
    with pytest.raises(ValueError):
        three_state.mu[0] = 5.0


def test_check_grid(three_state):
    three_state.check_grid(Grid(1.0, 250))
    with pytest.raises(Exception, match="grid too coarse"):
        three_state.check_grid(Grid(1.0, 4))
