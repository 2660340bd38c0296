from pathlib import Path

import click

from gaugekit.fixtures import FIXTURES, get_fixture, projected_cylinder_radii

from .options import emit, emit_json, emit_polytope, out_option


@click.command("fixture")
@click.argument("name", required=False)
@click.option("--list", "list_", is_flag=True, help="List the available fixtures.")
@out_option
def fixture_command(name: str | None, list_: bool, out: Path | None):
    """
    Writes the geometry JSON of a built-in fixture:
    ```sh
    gaugekit fixture pentagon_gauge --out C.json
    ```
    """
    if list_:
        emit("\n".join(f"{f.name:<20} {f.kind:<6} {f.description}" for f in FIXTURES.values()), out)
        return
    if name is None:
        raise click.UsageError("give a fixture NAME or --list")
    emit_polytope(get_fixture(name).polytope(), out)


@click.command("projection")
@click.option(
    "--n", type=click.IntRange(min=3), default=64, show_default=True, help="Vertices of the disk."
)
@out_option
def projection_command(n: int, out: Path | None):
    """
    Circumradius of the projected slanted cylinder against the cylinder itself
    and against its projection.
    """
    result = projected_cylinder_radii(n)
    emit_json({"n": result.n, "in_space": result.in_space, "in_plane": result.in_plane}, out)
