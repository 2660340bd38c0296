from pathlib import Path
from typing import Literal

import click

from gaugekit.successive import Quantity, full_profile, successive_radius

from .options import emit, emit_json, gauge_option, grid_of, load_pair, out_option, set_option

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text"]),
    default="json",
    show_default=True,
    help="JSON document or human-readable table.",
)


@click.command("radius")
@set_option
@gauge_option
@click.option(
    "--quantity",
    required=True,
    help="Successive radius such as R-pi-sup:1 (family R|r, mode pi|sigma, position sup|inf, index j).",
)
@out_option
@click.pass_context
def radius_command(
    ctx: click.Context, set_path: Path, gauge_path: Path, quantity: str, out: Path | None
):
    """
    One successive radius:
    ```sh
    gaugekit radius --set K.json --gauge C.json --quantity R-pi-sup:1
    ```
    """
    q = Quantity.parse(quantity)
    K, C = load_pair(set_path, gauge_path)
    emit_json(successive_radius(K, C, q, grid_of(ctx)).to_json(q.name), out)


@click.command("profile")
@set_option
@gauge_option
@format_option
@out_option
@click.pass_context
def profile_command(
    ctx: click.Context,
    set_path: Path,
    gauge_path: Path,
    fmt: Literal["json", "text"],
    out: Path | None,
):
    """Every successive radius for j = 1..d, with the monotone chain checks."""
    K, C = load_pair(set_path, gauge_path)
    profile = full_profile(K, C, grid_of(ctx))
    if fmt == "text":
        emit(profile.to_text(), out)
    else:
        emit_json(profile.to_json(), out)
