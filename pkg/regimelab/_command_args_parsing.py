"""Trailing subcommand options such as ``lags 30 transform abs noclamp``.

An option spec is its name prefixed by one marker per value it takes: ``+`` an integer, ``.`` a float, ``*`` a word
kept verbatim. A spec without markers is a flag.
"""

from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import _msgs as msgs
from ._commands import Float, Int
from ._helpers import ConfigError

MARKERS: Dict[str, Callable[[str], Any]] = {
    "+": Int.decode,
    ".": Float.decode,
    "*": str,
}


class OptionSpec(NamedTuple):
    name: str
    markers: str

    @classmethod
    def parse(cls, spec: str) -> "OptionSpec":
        name = spec.lstrip("".join(MARKERS))
        return cls(name, spec[: len(spec) - len(name)])

    @property
    def default(self) -> Any:
        if not self.markers:
            return False
        return None if len(self.markers) == 1 else [None] * len(self.markers)

    def read(self, tokens: Sequence[str]) -> Any:
        """Convert the values following the option name; ``tokens`` holds exactly one per marker."""
        if not self.markers:
            return True
        values = [MARKERS[marker](token) for marker, token in zip(self.markers, tokens)]
        return values[0] if len(values) == 1 else values


def option_name(spec: str) -> str:
    return OptionSpec.parse(spec).name


def extract_args(
    actual_args: Sequence[str],
    expected: Tuple[str, ...],
    error_on_unexpected: bool = True,
    left_from_first_unexpected: bool = True,
    exception: Optional[str] = None,
) -> Tuple[List[Any], Sequence[str]]:
    """Parse option values.

    :param actual_args: the tokens after the config path
    :param expected: option specs, e.g. ``("+lags", "*transform", "..clamp", "noclamp")``
    :param error_on_unexpected: raise on a token that is not an expected option
    :param left_from_first_unexpected: stop at the first unexpected token and return everything from it on
    :param exception: message for an unexpected token, formatted with the token
    :returns: values in the order of ``expected`` (defaults for absent options) and the tokens left over

    >>> extract_args(('lags', '20', 'noclamp'), ('+lags', '*transform', 'noclamp'))
    ([20, None, True], [])
    """
    specs = [OptionSpec.parse(spec) for spec in expected]
    positions = {spec.name: position for position, spec in enumerate(specs)}
    results: List[Any] = [spec.default for spec in specs]
    left: List[str] = []
    i = 0
    while i < len(actual_args):
        position = positions.get(actual_args[i].lower())
        if position is None:
            if error_on_unexpected:
                raise ConfigError(msgs.SYNTAX_ERROR_MSG if exception is None else exception.format(actual_args[i]))
            if left_from_first_unexpected:
                return results, actual_args[i:]
            left.append(actual_args[i])
            i += 1
            continue
        spec = specs[position]
        values = actual_args[i + 1 : i + 1 + len(spec.markers)]
        if len(values) < len(spec.markers):
            raise ConfigError(msgs.SYNTAX_ERROR_MSG)
        results[position] = spec.read(values)
        i += 1 + len(spec.markers)
    return results, left
