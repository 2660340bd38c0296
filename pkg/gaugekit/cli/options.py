"""Options and I/O helpers shared by the commands."""

import json
from pathlib import Path
from typing import Any

import click
import numpy as np

from gaugekit.config import GridConfig
from gaugekit.errors import InputError
from gaugekit.geometry import Polytope, load_polytope, polytope_to_json
from gaugekit.measures import GaugeBody
from gaugekit.types import Vector

_geometry_path = click.Path(exists=True, path_type=Path, file_okay=True, dir_okay=False)

set_option = click.option(
    "--set",
    "set_path",
    type=_geometry_path,
    required=True,
    help="Geometry JSON of the set K.",
)
gauge_option = click.option(
    "--gauge",
    "gauge_path",
    type=_geometry_path,
    required=True,
    help="Geometry JSON of the gauge body C (0 in its interior).",
)
out_option = click.option(
    "--out",
    type=click.Path(path_type=Path, dir_okay=False),
    default=None,
    help="Write the result to this file instead of standard output.",
)


def load_set(path: Path) -> Polytope:
    return load_polytope(path)


def load_gauge(path: Path) -> GaugeBody:
    return GaugeBody(load_polytope(path))


def load_pair(set_path: Path, gauge_path: Path) -> tuple[Polytope, GaugeBody]:
    K, C = load_set(set_path), load_gauge(gauge_path)
    if K.dim != C.dim:
        raise InputError(f"the set lives in dimension {K.dim} but the gauge in {C.dim}")
    return K, C


def parse_point(text: str, dim: int, option: str = "--point") -> Vector:
    """Parses comma separated coordinates such as `1,0.5`."""
    try:
        coords = [float(x) for x in text.split(",")]
    except ValueError as e:
        raise InputError(f"{option}: expected comma separated numbers, got {text!r}") from e
    if len(coords) != dim:
        raise InputError(f"{option}: expected {dim} coordinates, got {len(coords)}")
    point = np.array(coords)
    if not np.all(np.isfinite(point)):
        raise InputError(f"{option}: coordinates must be finite")
    return point


def grid_of(ctx: click.Context) -> GridConfig:
    return ctx.find_root().obj["grid"]


def emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text)
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def emit_json(data: Any, out: Path | None) -> None:
    emit(json.dumps(data, indent=2), out)


def emit_polytope(P: Polytope, out: Path | None) -> None:
    emit_json(polytope_to_json(P), out)
