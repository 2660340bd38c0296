"""
Named reference geometries.

Each fixture is either a set `K` or a gauge body `C` (with the origin in its
interior). Fixtures that come with a natural radius for ball hulls carry it in
`Fixture.lam`.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from gaugekit.errors import InputError
from gaugekit.geometry import Polytope
from gaugekit.measures import GaugeBody, circumradius
from gaugekit.types import PointArray

logger = logging.getLogger(__name__)


def regular_polygon(n: int, radius: float = 1.0) -> PointArray:
    """Vertices of the regular `n`-gon inscribed in the circle of `radius`."""
    theta = 2.0 * np.pi * np.arange(n) / n
    return radius * np.stack([np.cos(theta), np.sin(theta)], axis=1)


def slanted_cylinder(n: int = 64) -> Polytope:
    """
    `[(1, 0, 1), (-1, 0, -1)] + D`, with `D` the regular `n`-gon approximating
    the unit disk of the plane `x3 = 0`.
    """
    disk = np.hstack([regular_polygon(n), np.zeros((n, 1))])
    axis = np.array([1.0, 0.0, 1.0])
    return Polytope.from_points(np.vstack([disk + axis, disk - axis]))


def stadium(n: int = 64) -> Polytope:
    """`[(-1, 0), (1, 0)] + D` in the plane, the projection of `slanted_cylinder(n)`."""
    disk = regular_polygon(n)
    shift = np.array([1.0, 0.0])
    return Polytope.from_points(np.vstack([disk + shift, disk - shift]))


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: Literal["set", "gauge"]
    description: str
    build: Callable[[], Polytope]
    lam: float | None = None
    """Ball hull radius the fixture is drawn with, if any."""

    def polytope(self) -> Polytope:
        return self.build()


_PENTAGON = [(0.0, 2.0), (-1.9, 0.62), (-1.18, -1.62), (1.18, -1.62), (1.9, 0.62)]
_TRIANGLE = [(3.4, 3.0), (3.9, 2.11), (5.46, 2.59)]
_OCTAHEDRON = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
_CUBE = [(x, y, z) for x in (0.0, 1.0) for y in (0.0, 1.0) for z in (0.0, 1.0)]

FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            "unit_square",
            "set",
            "the square [0, 1]^2",
            lambda: Polytope.from_points([[0, 0], [1, 0], [1, 1], [0, 1]]),
        ),
        Fixture(
            "box_gauge",
            "gauge",
            "the square [-1, 1]^2",
            lambda: Polytope.from_points([[-1, -1], [1, -1], [1, 1], [-1, 1]]),
        ),
        Fixture(
            "pentagon_gauge",
            "gauge",
            "regular pentagon of circumradius 2 centered at the origin",
            lambda: Polytope.from_points(_PENTAGON),
        ),
        Fixture(
            "hull_triangle",
            "set",
            "triangle drawn with its ball hull at radius 0.6 against the pentagon",
            lambda: Polytope.from_points(_TRIANGLE),
            lam=0.6,
        ),
        Fixture(
            "hull_triangle_unit",
            "set",
            "the same triangle, drawn with its ball hull at radius 1",
            lambda: Polytope.from_points(_TRIANGLE),
            lam=1.0,
        ),
        Fixture(
            "slanted_cylinder",
            "gauge",
            "slanted cylinder [(1,0,1), (-1,0,-1)] + 64-gon disk of the plane x3 = 0",
            slanted_cylinder,
        ),
        Fixture(
            "stadium",
            "set",
            "projection of the slanted cylinder onto x3 = 0, in plane coordinates",
            stadium,
        ),
        Fixture("box3", "set", "the cube [0, 1]^3", lambda: Polytope.from_points(_CUBE)),
        Fixture(
            "octahedron_gauge",
            "gauge",
            "the cross-polytope conv(±e_i) of R^3",
            lambda: Polytope.from_points(_OCTAHEDRON),
        ),
    ]
}


def get_fixture(name: str) -> Fixture:
    """
    Raises:
        InputError: for unknown names.
    """
    try:
        return FIXTURES[name]
    except KeyError:
        raise InputError(
            f"unknown fixture {name!r}, expected one of {', '.join(FIXTURES)}"
        ) from None


@dataclass(frozen=True)
class ProjectedRadii:
    """Circumradii of the projected cylinder, in space and inside the plane."""

    n: int
    """Number of vertices of the disk approximation."""

    in_space: float
    """`R(K, C)` for `K` the projection of the cylinder `C` onto `x3 = 0`."""

    in_plane: float
    """`R(K, Proj(C))`, measured inside the plane."""


def projected_cylinder_radii(n: int = 64) -> ProjectedRadii:
    """
    Outer radii of projections differ from outer radii against projected gauges.

    With `C` the slanted cylinder and `K` its orthogonal projection onto the
    plane `x3 = 0`, `R(K, C)` is 2 (up to the polygonal approximation of the
    disk) whereas `K` is a translate of the projection of `C`, so that
    `R(K, Proj(C)) = 1`.
    """
    cylinder = slanted_cylinder(n)
    flat = stadium(n)
    K = Polytope.from_points(np.hstack([flat.vertices, np.zeros((len(flat.vertices), 1))]))
    in_space = circumradius(K, GaugeBody(cylinder)).value
    in_plane = circumradius(flat, GaugeBody(flat)).value
    logger.info("projected balls with a %d-gon: R = %.9g in space, %.9g in the plane", n, in_space, in_plane)
    return ProjectedRadii(n, in_space, in_plane)
