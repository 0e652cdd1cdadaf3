import numpy as np
import pytest

from regimelab import ConfigError
from regimelab.models import RegimeParams
from regimelab.stylized import drift_double_integral, linear_autocovariance
from test.conftest import THREE_STATE_Q

DT = 1 / 250


def test_equal_drifts_integrate_exactly():
    params = RegimeParams.create(THREE_STATE_Q, [0.3, 0.3, 0.3], [0.1, 0.15, 0.25])
    assert drift_double_integral(params, 0.1, 0.5, DT) == pytest.approx(0.09 * DT**2, rel=1e-9)


def test_far_apart_intervals_decorrelate(three_state):
    mean_drift = float(three_state.mu @ three_state.stationary)
    far = drift_double_integral(three_state, 0.0, 50.0, DT)
    assert far == pytest.approx(mean_drift**2 * DT**2, rel=1e-6)
    near = drift_double_integral(three_state, 0.0, 2 * DT, DT)
    assert near > far


def test_equal_drifts_leave_no_cross_term():
    params = RegimeParams.create(THREE_STATE_Q, [0.3, 0.3, 0.3], [0.1, 0.15, 0.25])
    report = linear_autocovariance(params, 0.1, 0.2, DT, 200, seed=5)
    assert report.cross_term == pytest.approx(0.0, abs=1e-15)
    assert report.total == pytest.approx(0.0, abs=1e-15)
    assert report.replications == 200


def test_batching_does_not_change_estimate(three_state):
    one = linear_autocovariance(three_state, 0.04, 0.2, DT, 300, seed=8, batch_size=300)
    split = linear_autocovariance(three_state, 0.04, 0.2, DT, 300, seed=8, batch_size=70)
    assert split.cross_term == pytest.approx(one.cross_term, rel=1e-12)
    assert split.sample_covariance == pytest.approx(one.sample_covariance, rel=1e-12)


def test_arguments(three_state):
    with pytest.raises(ConfigError, match="need t \\+ dt < s"):
        linear_autocovariance(three_state, 0.5, 0.1, DT, 100)
    with pytest.raises(ConfigError, match="not a multiple of dt"):
        linear_autocovariance(three_state, 0.1013, 0.5, DT, 100)
    with pytest.raises(ConfigError, match="at least 2 replications"):
        linear_autocovariance(three_state, 0.1, 0.5, DT, 1)
    hmm_only = RegimeParams.create(THREE_STATE_Q, [1.0, 0.0, -2.0], sigma0=0.15)
    with pytest.raises(ConfigError, match="needs a volatility vector"):
        linear_autocovariance(hmm_only, 0.1, 0.5, DT, 100)


@pytest.mark.slow
@pytest.mark.parametrize("params", ["three_state", "asymmetric", "two_state"])
@pytest.mark.parametrize("t, s", [(0.1, 0.5), (0.04, 0.2), (0.2, 0.3)])
def test_decomposition_matches_sample_covariance(params, t, s, request):
    report = linear_autocovariance(request.getfixturevalue(params), t, s, DT, 100_000, seed=9)
    assert abs(report.total - report.sample_covariance) <= 3 * report.combined_stderr
    assert np.isfinite(report.combined_stderr)
