import math

import pytest

import regimelab  # noqa: F401  registers the subcommands
from regimelab import _msgs as msgs
from regimelab._commands import (
    SUPPORTED_COMMANDS,
    Float,
    Int,
    ModelKind,
    PositiveFloat,
    PositiveInt,
    Seed,
    Transform,
)
from regimelab._helpers import ConfigError


def test_int_decode():
    assert Int.decode("42") == 42
    assert Int.decode("-3") == -3
    for bad in ("4.0", "+4", "04", "", "x"):
        with pytest.raises(ConfigError, match=msgs.INVALID_INT_MSG):
            Int.decode(bad)


def test_positive_int_rejects_zero():
    assert PositiveInt.decode("1") == 1
    with pytest.raises(ConfigError, match=msgs.INVALID_POSITIVE_MSG):
        PositiveInt.decode("0")


def test_seed_range():
    assert Seed.decode(str(2**64 - 1)) == 2**64 - 1
    with pytest.raises(ConfigError, match="unsigned 64-bit"):
        Seed.decode(str(2**64))
    with pytest.raises(ConfigError):
        Seed.decode("-1")


def test_float_decode():
    assert Float.decode("1e-3") == pytest.approx(1e-3)
    assert Float.decode("-2") == -2.0
    for bad in ("nan", "inf", "-inf", "one"):
        with pytest.raises(ConfigError, match=msgs.INVALID_FLOAT_MSG):
            Float.decode(bad)


def test_positive_float():
    assert math.isclose(PositiveFloat.decode("0.25"), 0.25)
    with pytest.raises(ConfigError, match=msgs.INVALID_POSITIVE_MSG):
        PositiveFloat.decode("0")
    with pytest.raises(ConfigError, match=msgs.INVALID_FLOAT_MSG):
        PositiveFloat.decode("abc")


def test_word_choices():
    assert ModelKind.decode("FB") == "fb"
    assert Transform.decode("abs") == "abs"
    with pytest.raises(ConfigError, match="must be one of hmm, msm, fb"):
        ModelKind.decode("garch")


def test_registered_subcommands():
    assert set(SUPPORTED_COMMANDS) == {"simulate", "filter", "detect", "portfolio", "stylized", "converge", "compare"}
    detect = SUPPORTED_COMMANDS["detect"]
    assert detect.func_name == "detect"
    assert detect.flags == {msgs.FLAG_NEEDS_SIGMA, msgs.FLAG_DISTINCT_SIGMA}
    assert SUPPORTED_COMMANDS["portfolio"].command_args == ("..clamp", "noclamp", ".wealth")
    assert all(sig.summary for sig in SUPPORTED_COMMANDS.values())
