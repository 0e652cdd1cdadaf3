"""
Value converters shared by the config parser and subcommand options, and the subcommand registry.
"""

import math
from typing import Any, Callable, Dict, Optional, Set, Tuple

from . import _msgs as msgs
from ._helpers import ConfigError

SUPPORTED_COMMANDS: Dict[str, "Signature"] = dict()  # Dictionary of supported subcommands name => Signature


class ConfigType:
    @classmethod
    def decode(cls, value: str) -> Any:
        raise NotImplementedError


class Int(ConfigType):
    """Argument converter for 64-bit signed integers"""

    DECODE_ERROR = msgs.INVALID_INT_MSG
    MIN_VALUE = -(2**63)
    MAX_VALUE = 2**63 - 1

    @classmethod
    def valid(cls, value: int) -> bool:
        return cls.MIN_VALUE <= value <= cls.MAX_VALUE

    @classmethod
    def decode(cls, value: str, decode_error: Optional[str] = None) -> int:
        try:
            out = int(value)
            if not cls.valid(out) or str(out) != value:
                raise ValueError
            return out
        except ValueError:
            raise ConfigError(decode_error or cls.DECODE_ERROR)


class PositiveInt(Int):
    DECODE_ERROR = msgs.INVALID_POSITIVE_MSG
    MIN_VALUE = 1


class Seed(Int):
    """Argument converter for unsigned 64-bit seeds"""

    DECODE_ERROR = msgs.INVALID_SEED_MSG
    MIN_VALUE = 0
    MAX_VALUE = 2**64 - 1


class Float(ConfigType):
    """Argument converter for finite floating-point values"""

    DECODE_ERROR = msgs.INVALID_FLOAT_MSG

    @classmethod
    def valid(cls, value: float) -> bool:
        return math.isfinite(value)

    @classmethod
    def decode(cls, value: str, decode_error: Optional[str] = None) -> float:
        try:
            out = float(value)
        except ValueError:
            raise ConfigError(decode_error or Float.DECODE_ERROR)
        if not Float.valid(out):
            raise ConfigError(decode_error or Float.DECODE_ERROR)
        if not cls.valid(out):
            raise ConfigError(decode_error or cls.DECODE_ERROR)
        return out


class PositiveFloat(Float):
    DECODE_ERROR = msgs.INVALID_POSITIVE_MSG

    @classmethod
    def valid(cls, value: float) -> bool:
        return math.isfinite(value) and value > 0


class Word(ConfigType):
    """Argument converter for case-insensitive keywords; subclasses restrict the choices."""

    CHOICES: Tuple[str, ...] = ()

    @classmethod
    def decode(cls, value: str, decode_error: Optional[str] = None) -> str:
        out = value.lower()
        if cls.CHOICES and out not in cls.CHOICES:
            raise ConfigError(decode_error or msgs.INVALID_CHOICE_MSG.format(", ".join(cls.CHOICES)))
        return out


class ModelKind(Word):
    CHOICES = ("hmm", "msm", "fb")


class Transform(Word):
    CHOICES = ("identity", "abs", "square", "sign")


class Signature:
    """Registered subcommand.

    :param name: subcommand name on the command line
    :param func_name: name of the implementing method on the lab
    :param args: trailing options in the ``extract_args`` marker language
    :param flags: preconditions checked before dispatch, see the ``FLAG_*`` constants in ``_msgs``
    """

    def __init__(self, name: str, func_name: str, args: Tuple[str, ...] = (), flags: str = "", summary: str = ""):
        self.name = name
        self.func_name = func_name
        self.command_args = args
        self.flags: Set[str] = set(flags)
        self.summary = summary

    def __repr__(self) -> str:
        return f"Signature({self.name!r}, args={self.command_args!r}, flags={''.join(sorted(self.flags))!r})"


def command(*args: Any, **kwargs: Any) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        cmd_name = kwargs.pop("name", func.__name__)
        if not isinstance(cmd_name, str):
            raise ValueError("command name should be a string")
        SUPPORTED_COMMANDS[cmd_name.lower()] = Signature(cmd_name.lower(), func.__name__, *args, **kwargs)
        return func

    return decorator
