from pathlib import Path

import click

from gaugekit.measures import ball_hull, ball_intersect

from .options import emit_polytope, gauge_option, load_pair, out_option, set_option

lambda_option = click.option(
    "--lambda", "lam", type=float, required=True, help="Radius λ of the balls."
)


@click.command("bi")
@set_option
@gauge_option
@lambda_option
@out_option
def bi_command(set_path: Path, gauge_path: Path, lam: float, out: Path | None):
    """Ball intersection bi(K, C, λ), the centers of the λC-balls covering K."""
    K, C = load_pair(set_path, gauge_path)
    emit_polytope(ball_intersect(K, C, lam), out)


@click.command("bh")
@set_option
@gauge_option
@lambda_option
@out_option
def bh_command(set_path: Path, gauge_path: Path, lam: float, out: Path | None):
    """
    Ball hull bh(K, C, λ), the intersection of every λC-ball covering K:
    ```sh
    gaugekit bh --set K.json --gauge C.json --lambda 0.6
    ```
    """
    K, C = load_pair(set_path, gauge_path)
    emit_polytope(ball_hull(K, C, lam), out)
