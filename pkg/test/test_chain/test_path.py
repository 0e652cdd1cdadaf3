import numpy as np
import pytest

from regimelab import ConfigError
from regimelab.chain import ChainPath, initial_distribution, simulate_chain, state_at, stationary_distribution
from test.conftest import THREE_STATE_Q


def test_path_structure(rng):
    path = simulate_chain(THREE_STATE_Q, 2.0, rng)
    assert path.jump_times[0] == 0.0
    assert np.all(np.diff(path.jump_times) > 0)
    assert path.jump_times[-1] < 2.0
    assert np.all(path.states[1:] != path.states[:-1])
    assert path.jumps == len(path.states) - 1


def test_fixed_initial_state(rng):
    for _ in range(10):
        assert simulate_chain(THREE_STATE_Q, 0.5, rng, initial=2).states[0] == 2


def test_right_continuity():
    path = ChainPath(np.array([0.0, 0.4]), np.array([1, 0]), 1.0)
    assert state_at(path, 0.0) == 1
    assert state_at(path, 0.4) == 0
    assert state_at(path, 0.39999) == 1
    assert state_at(path, 1.0) == 0
    np.testing.assert_array_equal(path.indicators([0.1, 0.5], 2), [[0.0, 1.0], [1.0, 0.0]])


def test_state_at_out_of_range():
    path = ChainPath(np.array([0.0]), np.array([0]), 1.0)
    with pytest.raises(ConfigError, match="outside path horizon"):
        state_at(path, 1.5)
    with pytest.raises(ConfigError):
        state_at(path, -0.1)


def test_single_state_never_jumps(rng):
    path = simulate_chain([[0.0]], 10.0, rng)
    assert path.jumps == 0
    assert path.occupation_times(1)[0] == pytest.approx(10.0)


def test_reproducible_from_seed():
    first = simulate_chain(THREE_STATE_Q, 3.0, np.random.default_rng(5))
    second = simulate_chain(THREE_STATE_Q, 3.0, np.random.default_rng(5))
    np.testing.assert_array_equal(first.jump_times, second.jump_times)
    np.testing.assert_array_equal(first.states, second.states)


def test_initial_distribution():
    np.testing.assert_allclose(initial_distribution(THREE_STATE_Q, None), stationary_distribution(THREE_STATE_Q))
    np.testing.assert_array_equal(initial_distribution(THREE_STATE_Q, 1), [0.0, 1.0, 0.0])
    np.testing.assert_allclose(initial_distribution(THREE_STATE_Q, [1, 1, 2]), [0.25, 0.25, 0.5])
    with pytest.raises(ConfigError, match="outside 1..3"):
        initial_distribution(THREE_STATE_Q, 3)
    with pytest.raises(ConfigError, match="probability vector"):
        initial_distribution(THREE_STATE_Q, [1, -1, 1])


def test_nonpositive_horizon(rng):
    with pytest.raises(ConfigError, match="horizon must be positive"):
        simulate_chain(THREE_STATE_Q, 0.0, rng)


@pytest.mark.slow
def test_occupation_fractions_converge_to_stationary():
    rng = np.random.default_rng(11)
    nu = stationary_distribution(THREE_STATE_Q)
    occupation = np.zeros(3)
    for _ in range(20):
        occupation += simulate_chain(THREE_STATE_Q, 100.0, rng).occupation_times(3)
    np.testing.assert_allclose(occupation / occupation.sum(), nu, rtol=0.05)


def test_occupation_fractions_short_run():
    rng = np.random.default_rng(3)
    nu = stationary_distribution(THREE_STATE_Q)
    path = simulate_chain(THREE_STATE_Q, 100.0, rng)
    fractions = path.occupation_times(3) / 100.0
    assert fractions.sum() == pytest.approx(1.0)
    np.testing.assert_allclose(fractions, nu, atol=0.1)
