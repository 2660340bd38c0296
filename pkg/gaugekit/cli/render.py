from pathlib import Path

import click

from gaugekit.render import What, render_svg

from .options import emit, gauge_option, load_pair, out_option, set_option


@click.command("render")
@set_option
@gauge_option
@click.option(
    "--what",
    type=click.Choice(["bh", "bi", "cc", "ic"]),
    default="bh",
    show_default=True,
    help="Construction to draw.",
)
@click.option("--lambda", "lam", type=float, default=None, help="Radius of bh and bi.")
@out_option
def render_command(
    set_path: Path, gauge_path: Path, what: What, lam: float | None, out: Path | None
):
    """
    SVG figure of a planar construction: K thin, the generating translates
    dashed, the result bold.
    ```sh
    gaugekit render --set K.json --gauge C.json --lambda 1 --what bh --out fig.svg
    ```
    """
    K, C = load_pair(set_path, gauge_path)
    emit(render_svg(K, C, what, lam), out)
