"""
The `gaugekit` command line.

Every command reads geometry JSON files and writes JSON (or SVG for `render`)
to standard output, or to `--out`. Exit codes: 0 on success, 1 on input
errors, 2 on computation errors, 3 when `verify` finds a hard failure.
"""

import logging
import sys
from collections.abc import Sequence

import click

from gaugekit.config import GRID_ENV_VAR, GridConfig, grid_from_env
from gaugekit.errors import ComputationError, InputError
from gaugekit.version import __version__

from .balls import bh_command, bi_command
from .fixtures import fixture_command, projection_command
from .measures import (
    cc_command,
    circumradius_command,
    diameter_command,
    dist_command,
    gamma_command,
    ic_command,
    inradius_command,
    width_command,
)
from .render import render_command
from .successive import profile_command, radius_command
from .verify import verify_command

logger = logging.getLogger(__name__)

INPUT_ERROR = 1
COMPUTATION_ERROR = 2


class GaugekitGroup(click.Group):
    """Maps gaugekit exceptions to exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except InputError as e:
            logger.debug("input error", exc_info=True)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(INPUT_ERROR)
        except ComputationError as e:
            logger.debug("computation error", exc_info=True)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(COMPUTATION_ERROR)


@click.group(cls=GaugekitGroup)
@click.version_option(__version__, prog_name="gaugekit")
@click.option("-v", "--verbose", count=True, help="Log INFO (-v) or DEBUG (-vv) to stderr.")
@click.option(
    "--grid",
    default=None,
    help=f"Search grid overrides such as angles=360,sphere=200. Takes precedence over {GRID_ENV_VAR}.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: int, grid: str | None):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    config = grid_from_env()
    if grid is not None:
        config = GridConfig.from_string(grid, config)
    ctx.ensure_object(dict)["grid"] = config


for command in [
    gamma_command,
    dist_command,
    circumradius_command,
    inradius_command,
    cc_command,
    ic_command,
    diameter_command,
    width_command,
    bi_command,
    bh_command,
    radius_command,
    profile_command,
    verify_command,
    render_command,
    fixture_command,
    projection_command,
]:
    cli.add_command(command)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs the command line on `argv` and returns the exit code.
    Usage errors and unreadable files count as input errors.
    """
    try:
        rv = cli.main(args=list(argv or []), prog_name="gaugekit", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return INPUT_ERROR
    except click.Abort:
        click.echo("Aborted!", err=True)
        return INPUT_ERROR
    return rv if isinstance(rv, int) else 0


def run() -> None:
    sys.exit(main(sys.argv[1:]))
