import numpy as np
import pytest

from regimelab import ConfigError, StabilityError
from regimelab.chain import RateMatrix, stationary_distribution, transition_matrix
from test.conftest import THREE_STATE_Q


def test_rate_matrix_is_read_only():
    q = RateMatrix(THREE_STATE_Q)
    assert q.d == 3
    assert q.max_exit_rate == 8.0
    with pytest.raises(ValueError):
        q.values[0, 0] = 1.0


@pytest.mark.parametrize(
    "values,message",
    [
        ([[-1.0, 1.0, 0.0], [1.0, -1.0, 0.0]], "must be square"),
        ([[-1.0, 1.0], [1.0, -1.5]], "row 2 sums to -0.5"),
        ([[1.0, -1.0], [1.0, -1.0]], "row 1 has a negative off-diagonal entry"),
        ([[-1.0, 1.0], [0.0, 0.0]], "chain not irreducible"),
        ([[np.nan, 0.0], [0.0, 0.0]], "non-finite"),
        (np.zeros((0, 0)), "at least one state"),
    ],
)
def test_invalid_rate_matrices(values, message):
    with pytest.raises(ConfigError, match=message):
        RateMatrix(values)


def test_every_row_failure_reported():
    with pytest.raises(ConfigError) as ctx:
        RateMatrix([[-1.0, 2.0], [1.0, -2.0]])
    assert len(ctx.value.failures) == 2


def test_check_step():
    q = RateMatrix(THREE_STATE_Q)
    q.check_step(1 / 250)
    with pytest.raises(StabilityError, match="grid too coarse"):
        q.check_step(0.125)


def test_stationary_distribution():
    nu = stationary_distribution(THREE_STATE_Q)
    np.testing.assert_allclose(nu @ np.array(THREE_STATE_Q), 0.0, atol=1e-12)
    assert nu.sum() == pytest.approx(1.0)
    assert np.all(nu > 0)
    np.testing.assert_allclose(stationary_distribution([[-1.0, 1.0], [2.0, -2.0]]), [2 / 3, 1 / 3])


def test_single_state_chain():
    np.testing.assert_allclose(stationary_distribution([[0.0]]), [1.0])
    np.testing.assert_allclose(transition_matrix([[0.0]], 3.0), [[1.0]])


def test_transition_matrix():
    np.testing.assert_allclose(transition_matrix(THREE_STATE_Q, 0.0), np.eye(3), atol=1e-15)
    p = transition_matrix(THREE_STATE_Q, 0.3)
    np.testing.assert_allclose(p.sum(axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(transition_matrix(THREE_STATE_Q, 0.6), p @ p, atol=1e-10)
    far = transition_matrix(THREE_STATE_Q, 50.0)
    np.testing.assert_allclose(far, np.tile(stationary_distribution(THREE_STATE_Q), (3, 1)), atol=1e-8)


def test_transition_matrix_batched_steps():
    steps = np.array([0.1, 0.2])
    batch = transition_matrix(THREE_STATE_Q, steps)
    assert batch.shape == (2, 3, 3)
    np.testing.assert_allclose(batch[1], transition_matrix(THREE_STATE_Q, 0.2))


def test_two_state_closed_form():
    a, b, dt = 1.5, 0.5, 0.7
    p = transition_matrix([[-a, a], [b, -b]], dt)
    decay = np.exp(-(a + b) * dt)
    assert p[0, 0] == pytest.approx((b + a * decay) / (a + b))


def test_negative_step():
    with pytest.raises(ConfigError, match="nonnegative"):
        transition_matrix(THREE_STATE_Q, -0.1)
