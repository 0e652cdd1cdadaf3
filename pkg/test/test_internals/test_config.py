import numpy as np
import pytest

from regimelab import ConfigError, GridError, parse_config
from regimelab import _msgs as msgs
from test.testtools import THREE_STATE_CONF, TWO_STATE_CONF, conf


def test_minimal_config_defaults():
    config = parse_config(text=TWO_STATE_CONF)
    assert config.model == "hmm"
    assert config.params.d == 2
    assert config.initial_state is None
    assert config.grid.horizon == 1.0
    assert config.grid.steps == 250
    assert config.bins == 50
    assert config.lags == 20
    assert config.transform == "square"
    assert config.clamp == (0.0, 1.0)
    assert config.constants == (0.0, 0.25, 0.5, 1.0)
    assert config.coarse_steps == (64, 256, 1024, 4096)
    assert config.detector_window == 10
    np.testing.assert_allclose(config.params.stationary, [2 / 3, 1 / 3])


def test_shipped_three_state_config(configs_dir):
    config = parse_config(configs_dir / "three_state.conf")
    np.testing.assert_array_equal(config.params.rates.values, [[-7, 4, 3], [2, -4, 2], [3, 5, -8]])
    np.testing.assert_array_equal(config.params.mu, [1.0, 0.0, -2.0])
    np.testing.assert_array_equal(config.params.sigma, [0.10, 0.15, 0.25])
    assert config.model == "fb"
    assert config.grid.horizon == 1.0
    assert config.grid.steps == 250


@pytest.mark.parametrize("name", ["three_state.conf", "asymmetric.conf", "two_state.conf"])
def test_every_shipped_config_parses(configs_dir, name):
    config = parse_config(configs_dir / name)
    assert config.params.sigma is not None


def test_row_sum_failure_names_row():
    text = TWO_STATE_CONF.replace("rate_row 2 -2", "rate_row 2 -2.5")
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=text)
    assert any("row 2" in failure for failure in ctx.value.failures)
    assert ctx.value.exit_code == 2


def test_all_failures_reported_at_once():
    text = "rate_row -1 1\nrate_row 1 -1\nmu 0.1\nsigma -0.2 0.3\nsteps 0\nbogus 1\n"
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=text)
    failures = ctx.value.failures
    assert any("line 6: unknown key bogus" == failure for failure in failures)
    assert any("line 5: steps" in failure for failure in failures)
    assert any("mu has 1 entries" in failure for failure in failures)
    assert ctx.value.value == msgs.CONFIG_INVALID_MSG.format(len(failures))


def test_parse_errors_carry_line_and_key():
    text = TWO_STATE_CONF + "seed abc\nlags\n"
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=text)
    failures = ctx.value.failures
    assert any(failure.startswith("line 8: seed:") for failure in failures)
    assert any(failure.startswith("line 9: lags expects 1 value(s), got 0") for failure in failures)


def test_duplicate_key():
    with pytest.raises(ConfigError, match="configuration has 1 error"):
        parse_config(text=TWO_STATE_CONF + "steps 100\n")


def test_comments_and_case():
    config = parse_config(text="# market\n" + TWO_STATE_CONF.replace("model hmm", "MODEL MSM  # switching"))
    assert config.model == "msm"


def test_overrides_replace_file_values():
    config = parse_config(text=TWO_STATE_CONF, overrides={"steps": [1000], "seed": [7], "clamp": ["none"]})
    assert config.grid.steps == 1000
    assert config.seed == 7
    assert config.clamp is None


def test_override_failures_name_the_option():
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=TWO_STATE_CONF, overrides={"replications": [0]})
    assert ctx.value.failures[0].startswith("option replications: replications:")


def test_unstable_grid_rejected():
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=THREE_STATE_CONF + "steps 5\n")
    assert any("grid too coarse" in failure for failure in ctx.value.failures)


def test_initial_state_one_based():
    config = parse_config(text=conf(TWO_STATE_CONF, initial_state=2))
    assert config.initial_state == 1
    assert config.to_dict()["initial_state"] == 2
    with pytest.raises(ConfigError, match="configuration has 1 error"):
        parse_config(text=conf(TWO_STATE_CONF, initial_state=3))


def test_switching_models_need_sigma():
    text = "model msm\nrate_row -1 1\nrate_row 1 -1\nmu 0 0\nsigma0 0.2\n"
    with pytest.raises(ConfigError) as ctx:
        parse_config(text=text)
    assert ctx.value.failures == [msgs.MISSING_SIGMA_MSG.format("msm")]


def test_ragged_rows_and_missing_keys():
    with pytest.raises(ConfigError) as ctx:
        parse_config(text="rate_row -1 1\nrate_row 1 -1 0\n")
    assert msgs.MISSING_KEY_MSG.format("mu") in ctx.value.failures
    assert any("differing lengths" in failure for failure in ctx.value.failures)


def test_autocov_pair_required():
    with pytest.raises(ConfigError, match="configuration has 1 error"):
        parse_config(text=conf(THREE_STATE_CONF, autocov_t=0.2))
    config = parse_config(text=conf(THREE_STATE_CONF, autocov_t=0.2, autocov_s=0.5))
    assert config.autocov == (0.2, 0.5)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config file"):
        parse_config(tmp_path / "absent.conf")


def test_digest_stable_and_sensitive():
    first = parse_config(text=TWO_STATE_CONF)
    second = parse_config(text="\n\n" + TWO_STATE_CONF)
    assert first.digest() == second.digest()
    assert parse_config(text=conf(TWO_STATE_CONF, seed=1)).digest() != first.digest()
    assert parse_config(text=conf(TWO_STATE_CONF, workers=4)).digest() == first.digest()


def test_validate_convergence_divisibility():
    config = parse_config(text=conf(THREE_STATE_CONF, fine_steps=1000, coarse_steps=[64, 250], replications=10))
    with pytest.raises(GridError) as ctx:
        config.validate("converge")
    assert ctx.value.failures == [msgs.GRID_DIVISIBILITY_MSG.format(1000, 64)]
    assert ctx.value.exit_code == 2


def test_validate_detector_needs_distinct_volatilities():
    config = parse_config(text=THREE_STATE_CONF.replace("sigma 0.10 0.15 0.25", "sigma 0.1 0.1 0.2"))
    with pytest.raises(ConfigError, match="configuration has 1 error") as ctx:
        config.validate("detect")
    assert ctx.value.failures == [msgs.INDISTINGUISHABLE_STATES_MSG]
    config.validate("simulate")


def test_validate_portfolio_needs_replications():
    config = parse_config(text=TWO_STATE_CONF)
    with pytest.raises(ConfigError):
        config.validate("portfolio")
    parse_config(text=conf(TWO_STATE_CONF, replications=2)).validate("portfolio")


def test_validate_unknown_subcommand():
    with pytest.raises(ConfigError, match="unknown subcommand `plot`"):
        parse_config(text=TWO_STATE_CONF).validate("plot")
