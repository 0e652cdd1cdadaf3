import numpy as np
import pytest

from regimelab import ConfigError, NumericalError
from regimelab.models import Grid
from regimelab.stylized import empirical_acf, lag_one_square_acf, sign_counts, volatility_clustering_vote


def _ar1(rng, phi, n):
    noise = rng.normal(size=n)
    series = np.empty(n)
    series[0] = noise[0]
    for k in range(1, n):
        series[k] = phi * series[k - 1] + noise[k]
    return series


def test_white_noise_acf_within_bands(rng):
    report = empirical_acf(rng.normal(size=5000), 10, "identity")
    np.testing.assert_array_equal(report.lags, np.arange(1, 11))
    assert np.all(np.abs(report.values) < 5 * report.stderr)


def test_ar1_lag_one(rng):
    report = empirical_acf(_ar1(rng, 0.9, 5000), 3)
    assert report.values[0] == pytest.approx(0.9, abs=0.05)
    assert report.values[1] == pytest.approx(0.81, abs=0.08)


def test_include_zero(rng):
    report = empirical_acf(rng.normal(size=200), 5, "abs", include_zero=True)
    assert report.lags[0] == 0
    assert report.values[0] == pytest.approx(1.0)
    assert report.values.shape == (6,)
    assert report.transform == "abs"


@pytest.mark.parametrize("transform", ["identity", "abs", "square", "sign"])
def test_transforms_stay_in_range(rng, transform):
    report = empirical_acf(rng.normal(size=500), 4, transform)
    assert np.all(np.abs(report.values) <= 1.0)


def test_constant_series():
    with pytest.raises(NumericalError, match="constant series"):
        empirical_acf(np.full(100, 0.01), 5)
    # squares of a +-c series are constant too
    with pytest.raises(NumericalError):
        empirical_acf(np.tile([0.01, -0.01], 50), 5, "square")


def test_bad_arguments(rng):
    with pytest.raises(ConfigError, match="unknown transform cube"):
        empirical_acf(rng.normal(size=100), 5, "cube")
    with pytest.raises(ConfigError, match="too short"):
        empirical_acf(rng.normal(size=10), 20)


def test_lag_one_square_acf_of_volatility_bursts(rng):
    scale = np.repeat(rng.choice([0.5, 3.0], size=100), 30)
    assert lag_one_square_acf(scale * rng.normal(size=scale.size)) > 0.1


def test_sign_counts():
    assert sign_counts([-1.0, 0.0, 2.0, 3.0]) == (1, 2)
    assert sign_counts(np.array([])) == (0, 0)


def test_clustering_vote_shapes(three_state):
    vote = volatility_clustering_vote(three_state, Grid(1.0, 250), 5, seed=4)
    assert vote.replications == 5
    assert 0 <= vote.wins <= 5


@pytest.mark.slow
def test_fb_hmm_clusters_more_than_equal_variance_hmm(three_state, daily_grid):
    vote = volatility_clustering_vote(three_state, daily_grid, 100, seed=7)
    assert vote.wins >= 80
    assert vote.fb_mean > vote.hmm_mean
