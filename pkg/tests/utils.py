import json
from pathlib import Path

import numpy as np

from gaugekit import GaugeBody, GridConfig, Polytope, polytope_to_json

PROJECT_DIR = Path(__file__).resolve().parent.parent

SMALL_GRID = GridConfig(angles=90, sphere=60, offsets=9, refine_top=2)
"""Search grid small enough for unit tests."""

TINY_GRID = GridConfig(angles=24, sphere=20, offsets=5, refine_top=1)
"""Grid for 3D searches whose objective is constant."""


def box(half: float = 1.0, d: int = 2) -> Polytope:
    corners = np.array(np.meshgrid(*[[-half, half]] * d, indexing="ij")).reshape(d, -1).T
    return Polytope.from_points(corners)


def box_gauge(half: float = 1.0, d: int = 2) -> GaugeBody:
    return GaugeBody(box(half, d))


def unit_square() -> Polytope:
    return Polytope.from_points([[0, 0], [1, 0], [1, 1], [0, 1]])


def rectangle(width: float, height: float) -> Polytope:
    return Polytope.from_points([[0, 0], [width, 0], [width, height], [0, height]])


def unit_cube() -> Polytope:
    return Polytope.from_points([[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)])


def triangle() -> Polytope:
    return Polytope.from_points([[0.0, 0.0], [2.0, 0.0], [0.5, 1.5]])


def write_geometry(path: Path, P: Polytope) -> Path:
    path.write_text(json.dumps(polytope_to_json(P)))
    return path
