from pathlib import Path

import click

from gaugekit.geometry import AffineFlat, Subspace
from gaugekit.measures import (
    RadiiResult,
    circumcenter_set,
    circumradius,
    diameter,
    dist_to_flat,
    gamma,
    incenter_set,
    inradius,
    width,
)

from .options import (
    emit_json,
    emit_polytope,
    gauge_option,
    load_gauge,
    load_pair,
    out_option,
    parse_point,
    set_option,
)


@click.command("gamma")
@gauge_option
@click.option("--point", required=True, help="Comma separated coordinates of x.")
@out_option
def gamma_command(gauge_path: Path, point: str, out: Path | None):
    """
    Gauge value of a point:
    ```sh
    gaugekit gamma --gauge C.json --point 1,0.5
    ```
    """
    C = load_gauge(gauge_path)
    x = parse_point(point, C.dim)
    emit_json(RadiiResult(gamma(C, x)).to_json("gamma"), out)


@click.command("dist")
@gauge_option
@click.option("--point", required=True, help="Comma separated coordinates of y.")
@click.option("--through", required=True, help="A point of the flat.")
@click.option(
    "--direction",
    "directions",
    multiple=True,
    help="A vector spanning the flat's direction space. Repeat for higher dimensional flats.",
)
@out_option
def dist_command(
    gauge_path: Path, point: str, through: str, directions: tuple[str, ...], out: Path | None
):
    """
    Gauge distance from a point to an affine flat. Without `--direction` the
    flat is the single point given by `--through`.
    """
    C = load_gauge(gauge_path)
    y = parse_point(point, C.dim)
    x = parse_point(through, C.dim, "--through")
    if directions:
        vectors = [parse_point(v, C.dim, "--direction") for v in directions]
        direction = Subspace.spanned_by(vectors, C.dim)
    else:
        direction = Subspace.zero(C.dim)
    value, nearest = dist_to_flat(C, y, AffineFlat(x, direction))
    result = RadiiResult(value, witness_center=nearest, witness_subspace=direction)
    emit_json(result.to_json("dist"), out)


@click.command("circumradius")
@set_option
@gauge_option
@out_option
def circumradius_command(set_path: Path, gauge_path: Path, out: Path | None):
    """
    Circumradius R(K, C), the least λ such that a translate of λC covers K:
    ```sh
    gaugekit circumradius --set K.json --gauge C.json
    ```
    """
    K, C = load_pair(set_path, gauge_path)
    emit_json(circumradius(K, C).to_json("circumradius"), out)


@click.command("inradius")
@set_option
@gauge_option
@out_option
def inradius_command(set_path: Path, gauge_path: Path, out: Path | None):
    """Inradius r(K, C), the largest λ such that a translate of λC fits in K."""
    K, C = load_pair(set_path, gauge_path)
    emit_json(inradius(K, C).to_json("inradius"), out)


@click.command("cc")
@set_option
@gauge_option
@out_option
def cc_command(set_path: Path, gauge_path: Path, out: Path | None):
    """Geometry JSON of the set of circumcenters."""
    K, C = load_pair(set_path, gauge_path)
    emit_polytope(circumcenter_set(K, C), out)


@click.command("ic")
@set_option
@gauge_option
@out_option
def ic_command(set_path: Path, gauge_path: Path, out: Path | None):
    """Geometry JSON of the set of incenters."""
    K, C = load_pair(set_path, gauge_path)
    emit_polytope(incenter_set(K, C), out)


@click.command("diameter")
@set_option
@gauge_option
@out_option
def diameter_command(set_path: Path, gauge_path: Path, out: Path | None):
    K, C = load_pair(set_path, gauge_path)
    emit_json(diameter(K, C).to_json("diameter"), out)


@click.command("width")
@set_option
@gauge_option
@out_option
def width_command(set_path: Path, gauge_path: Path, out: Path | None):
    K, C = load_pair(set_path, gauge_path)
    emit_json(width(K, C).to_json("width"), out)
