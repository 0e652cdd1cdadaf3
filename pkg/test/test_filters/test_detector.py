import numpy as np
import pytest

from regimelab import ConfigError
from regimelab.filters import (
    default_window,
    map_states,
    qv_state_detector,
    realized_volatility,
    run_hmm_filter,
    state_accuracy,
)
from regimelab.models import Grid, simulate_drivers, simulate_msm

SIGMA = np.array([0.10, 0.15, 0.25])


@pytest.mark.parametrize("steps,window", [(250, 10), (2000, 10), (4000, 20), (10000, 50)])
def test_default_window(steps, window):
    assert default_window(steps) == window


def test_realized_volatility_of_constant_moves():
    dt = 1e-3
    increments = np.tile([0.2, -0.2], 20) * np.sqrt(dt)
    np.testing.assert_allclose(realized_volatility(increments, dt, 5), 0.2)


def test_realized_volatility_uses_trailing_window():
    dt = 1.0
    vol = realized_volatility(np.array([1.0, 1.0, 3.0, 3.0]), dt, 2)
    np.testing.assert_allclose(vol, [1.0, 1.0, np.sqrt(5.0), 3.0])
    with pytest.raises(ConfigError, match="window must be at least 1"):
        realized_volatility(np.ones(3), dt, 0)


def test_detector_recovers_piecewise_volatility():
    dt = 1e-4
    signs = np.tile([1.0, -1.0], 50)
    increments = np.concatenate([0.25 * signs, 0.10 * signs, 0.15 * signs]) * np.sqrt(dt)
    detected = qv_state_detector(increments, SIGMA, dt, window=10)
    assert detected.shape == (300,)
    assert np.all(detected[:100] == 2)
    assert np.all(detected[110:200] == 0)
    assert np.all(detected[210:] == 1)


def test_detector_needs_distinct_volatilities():
    with pytest.raises(ConfigError, match="states indistinguishable by volatility"):
        qv_state_detector(np.ones(20), [0.1, 0.2, 0.1], 0.01)


def test_map_states_and_accuracy():
    yhat = np.array([[0.7, 0.2, 0.1], [0.1, 0.3, 0.6]])
    np.testing.assert_array_equal(map_states(yhat), [0, 2])
    assert state_accuracy([0, 2, 1, 1], [0, 2, 2, 1]) == 0.75


def _accuracies(params, steps: int, replications: int, seed: int):
    grid = Grid(1.0, steps)
    drivers = simulate_drivers(grid, params.rates, seed=seed, replications=replications)
    bundle = simulate_msm(params, drivers)
    detected = qv_state_detector(bundle.increments, params.sigma, grid.dt)
    detector = state_accuracy(detected, drivers.states[:, 1:])
    hmm_params = params.equal_variance()
    hmm_states = map_states(run_hmm_filter(bundle.increments, hmm_params, grid))[:, 1:]
    return detector, state_accuracy(hmm_states, drivers.states[:, 1:])


def test_detector_beats_hmm_filter_on_fine_grid(three_state):
    detector, hmm = _accuracies(three_state, 4000, 5, seed=41)
    assert detector > hmm


@pytest.mark.slow
def test_detector_improves_with_sampling_frequency(three_state):
    coarse, _ = _accuracies(three_state, 250, 50, seed=42)
    fine, hmm = _accuracies(three_state, 10000, 50, seed=42)
    assert fine >= coarse + 0.15
    assert fine > hmm


@pytest.mark.slow
def test_detector_accuracy_nondecreasing_on_refined_path(three_state):
    fine = simulate_drivers(Grid(1.0, 10000), three_state.rates, seed=43, replications=100)
    accuracies = []
    for steps in (250, 2500, 10000):
        drivers = fine.coarsen(10000 // steps)
        bundle = simulate_msm(three_state, drivers)
        detected = qv_state_detector(bundle.increments, three_state.sigma, drivers.grid.dt)
        accuracies.append(state_accuracy(detected, drivers.states[:, 1:]))
    assert accuracies[0] <= accuracies[1] <= accuracies[2]
