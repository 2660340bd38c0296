import logging
from pathlib import Path
from typing import Literal

import click

from gaugekit.verify import run_verify

from .options import emit, emit_json, gauge_option, grid_of, load_pair, out_option, set_option
from .successive import format_option

logger = logging.getLogger(__name__)

VERIFY_FAILED = 3


@click.command("verify")
@set_option
@gauge_option
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the randomized checks.")
@format_option
@out_option
@click.pass_context
def verify_command(
    ctx: click.Context,
    set_path: Path,
    gauge_path: Path,
    seed: int,
    fmt: Literal["json", "text"],
    out: Path | None,
):
    """
    Runs every check of the verify manifest against the oracles and exits with
    code 3 if a hard check fails:
    ```sh
    gaugekit verify --set K.json --gauge C.json --seed 7
    ```
    """
    K, C = load_pair(set_path, gauge_path)
    report = run_verify(K, C, seed=seed, grid=grid_of(ctx))
    if fmt == "text":
        emit(report.to_text(), out)
    else:
        emit_json(report.to_json(), out)
    if not report.passed:
        logger.error(
            "%d hard check(s) failed: %s",
            len(report.hard_failures),
            ", ".join(c.name for c in report.hard_failures),
        )
        ctx.exit(VERIFY_FAILED)
