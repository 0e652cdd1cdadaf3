"""
Command-line entry point.

    regimelab run SUBCOMMAND CONFIG [OPTIONS...] [--out DIR] [--seed N] [--replications M] [--steps n]
    regimelab check CONFIG
    regimelab commands

Exit codes: 0 ok, 2 configuration error, 3 numerical error, 4 output error. Errors are reported on stderr as
one line of JSON.
"""

import json
import logging
import sys
from typing import Any, Dict, NoReturn, Optional, Tuple

import click
from dotenv import load_dotenv

from . import _msgs as msgs
from ._commands import SUPPORTED_COMMANDS
from ._config import parse_config
from ._helpers import OutputError, RegimeError
from ._io import jsonable
from ._lab import OUTPUT_DIR_ENV, RegimeLab

LOGGER = logging.getLogger("regimelab")


def _report(exc: RegimeError) -> None:
    failures = getattr(exc, "failures", [exc.value])
    payload = {"error": type(exc).__name__, "message": exc.value, "failures": failures, "exit_code": exc.exit_code}
    click.echo(json.dumps(payload), err=True)


def _fail(exc: RegimeError) -> NoReturn:
    _report(exc)
    sys.exit(exc.exit_code)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debug output.")
def cli(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("subcommand")
@click.argument("config", type=click.Path(dir_okay=False))
@click.argument("options", nargs=-1, type=click.UNPROCESSED)
@click.option("--out", "output_dir", envvar=OUTPUT_DIR_ENV, default="results", show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--replications", type=int, default=None)
@click.option("--steps", type=int, default=None)
@click.option("--horizon", type=float, default=None)
@click.option("--model", type=str, default=None)
def run(
    subcommand: str,
    config: str,
    options: Tuple[str, ...],
    output_dir: str,
    seed: Optional[int],
    replications: Optional[int],
    steps: Optional[int],
    horizon: Optional[float],
    model: Optional[str],
) -> None:
    """Run SUBCOMMAND with the experiment described in CONFIG."""
    overrides: Dict[str, Any] = {
        "seed": seed,
        "replications": replications,
        "steps": steps,
        "horizon": horizon,
        "model": model,
    }
    lab = RegimeLab(output_dir)
    try:
        summary = lab.execute_command(subcommand, config, *options, overrides=overrides)
    except RegimeError as exc:
        _fail(exc)
    except OSError as exc:
        _fail(OutputError(msgs.OUTPUT_FAILED_MSG.format(exc.filename or output_dir, exc.strerror or exc)))
    LOGGER.info(f"{subcommand} finished, outputs in {lab.output_dir}")
    click.echo(json.dumps(jsonable(summary), sort_keys=True))


@cli.command()
@click.argument("config", type=click.Path(dir_okay=False))
def check(config: str) -> None:
    """Parse and validate CONFIG, print the resolved settings."""
    try:
        resolved = parse_config(config)
    except RegimeError as exc:
        _fail(exc)
    click.echo(json.dumps(jsonable(resolved.to_dict()), indent=2, sort_keys=True))


@cli.command()
def commands() -> None:
    """List subcommands and their trailing options."""
    for name in sorted(SUPPORTED_COMMANDS):
        sig = SUPPORTED_COMMANDS[name]
        options = " ".join(sig.command_args)
        click.echo(f"{name:<10} {sig.summary}" + (f"  [{options}]" if options else ""))


def main() -> None:
    load_dotenv()
    cli()


if __name__ == "__main__":
    main()
