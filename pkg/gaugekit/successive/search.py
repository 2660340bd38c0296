"""
Grid search followed by local refinement, over directions and over offsets.

A search evaluates the objective on a fixed grid, hands the `refine_top` best
grid points to a local optimizer (`scipy.optimize.minimize_scalar` on bounded
intervals, Nelder-Mead in two parameters) and keeps the best value seen. The
reported accuracy is the distance between the refined optimum and the best grid
value, plus the refinement tolerance.
"""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from gaugekit.config import GridConfig
from gaugekit.successive.subspaces import (
    angle_of,
    direction_grid,
    hemisphere_spacing,
    tangent_basis,
    tilt,
    unit_from_angle,
)
from gaugekit.types import MatrixArray, Vector

logger = logging.getLogger(__name__)

REFINE_TOL = 1e-7
"""Refinement tolerance added to every searched accuracy."""

INF_SURROGATE = 1e12
"""Stand-in for infinite objective values during local refinement."""


@dataclass(frozen=True)
class SearchResult:
    """Best point found by a search."""

    value: float
    """Best objective value."""

    argument: Vector
    """Where it is attained: a unit direction or offset coordinates."""

    grid_value: float
    """Best value on the grid alone."""

    evaluations: int
    """Number of objective evaluations, grid included."""

    @property
    def accuracy(self) -> float:
        if math.isinf(self.value) or math.isinf(self.grid_value):
            return REFINE_TOL
        return abs(self.value - self.grid_value) + REFINE_TOL


def _finite(value: float) -> float:
    if math.isinf(value):
        return math.copysign(INF_SURROGATE, value)
    return value


def evaluate_grid(fn: Callable[[Vector], float], points: MatrixArray, workers: int = 1) -> Vector:
    """
    Evaluates `fn` on each row of `points`, on `workers` threads. The values are
    returned in grid order, whatever the number of workers.
    """
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return np.array(list(pool.map(fn, points)), dtype=np.float64)
    return np.array([fn(p) for p in points], dtype=np.float64)


def _top(values: Vector, maximize: bool, k: int) -> list[int]:
    keys = -values if maximize else values
    return [int(i) for i in np.argsort(keys, kind="stable")[:k]]


class _Best:
    def __init__(self, maximize: bool) -> None:
        self.maximize = maximize
        self.value = -math.inf if maximize else math.inf
        self.argument: Vector | None = None

    def offer(self, value: float, argument: Vector) -> None:
        better = value > self.value if self.maximize else value < self.value
        if better or self.argument is None:
            self.value, self.argument = value, argument


def search_directions(
    fn: Callable[[Vector], float],
    d: int,
    grid: GridConfig,
    maximize: bool,
    grid_values: tuple[MatrixArray, Vector] | None = None,
) -> tuple[SearchResult, tuple[MatrixArray, Vector]]:
    """
    Extremizes `fn` over unit directions of `R^d` (`d` in 2, 3), modulo sign.

    Args:
        fn (`Callable[[Vector], float]`): the objective of a unit vector.
        d (`int`): ambient dimension.
        grid (`GridConfig`): grid sizes and refinement settings.
        maximize (`bool`): sup if `True`, inf otherwise.
        grid_values (`tuple[MatrixArray, Vector] | None`): a previous grid
            evaluation of the same objective, reused instead of recomputed.

    Returns:
        `tuple[SearchResult, tuple[MatrixArray, Vector]]`: the result and the
        grid evaluation, for reuse by the opposite search.
    """
    if grid_values is None:
        directions = direction_grid(d, grid.angles, grid.sphere)
        values = evaluate_grid(fn, directions, grid.workers)
        evaluations = len(directions)
    else:
        directions, values = grid_values
        evaluations = 0
    sign = -1.0 if maximize else 1.0
    best = _Best(maximize)
    for i in range(len(values)):
        best.offer(float(values[i]), directions[i])
    grid_best = best.value

    for i in _top(values, maximize, grid.refine_top):
        if d == 2:
            step = np.pi / grid.angles
            start = angle_of(directions[i])
            res = minimize_scalar(
                lambda t: sign * _finite(fn(unit_from_angle(t))),
                bounds=(start - step, start + step),
                method="bounded",
                options={"xatol": 1e-10},
            )
            point = unit_from_angle(float(res.x))
        else:
            e1, e2 = tangent_basis(directions[i])
            h = hemisphere_spacing(grid.sphere)
            u = directions[i]
            res = minimize(
                lambda s, u=u, e1=e1, e2=e2: sign * _finite(fn(tilt(u, e1, e2, s))),
                x0=np.zeros(2),
                method="Nelder-Mead",
                options={
                    "initial_simplex": np.array([[0.0, 0.0], [h, 0.0], [0.0, h]]),
                    "xatol": 1e-9,
                    "fatol": 1e-12,
                    "maxiter": 400,
                },
            )
            point = tilt(u, e1, e2, res.x)
        evaluations += int(res.nfev) + 1
        best.offer(fn(point), point)

    assert best.argument is not None
    logger.debug(
        "direction search (%s) over %d grid points: grid %.12g, refined %.12g",
        "sup" if maximize else "inf",
        len(values),
        grid_best,
        best.value,
    )
    result = SearchResult(best.value, best.argument, grid_best, evaluations)
    return result, (directions, values)


def search_offsets(
    fn: Callable[[Vector], float],
    lower: Vector,
    upper: Vector,
    grid: GridConfig,
    maximize: bool,
) -> SearchResult:
    """
    Extremizes `fn` over the box `[lower, upper]` of dimension 0, 1 or 2.

    The grid has `grid.offsets` points per axis, endpoints included. One
    dimensional boxes are refined by bounded scalar minimization, two
    dimensional ones by Nelder-Mead started at the best grid points.
    """
    k = len(lower)
    if k == 0:
        value = fn(np.zeros(0))
        return SearchResult(value, np.zeros(0), value, 1)
    axes = [np.linspace(lo, hi, grid.offsets) for lo, hi in zip(lower, upper, strict=True)]
    points = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, k)
    values = np.array([fn(p) for p in points], dtype=np.float64)
    evaluations = len(points)
    best = _Best(maximize)
    for p, v in zip(points, values, strict=True):
        best.offer(float(v), p)
    grid_best = best.value
    sign = -1.0 if maximize else 1.0
    steps = (np.asarray(upper) - np.asarray(lower)) / max(grid.offsets - 1, 1)
    if np.all(steps <= 0):
        return SearchResult(best.value, best.argument, grid_best, evaluations)  # type: ignore[arg-type]

    for i in _top(values, maximize, grid.refine_top):
        start = points[i]
        if k == 1:
            lo = max(float(lower[0]), float(start[0] - steps[0]))
            hi = min(float(upper[0]), float(start[0] + steps[0]))
            if hi <= lo:
                continue
            res = minimize_scalar(
                lambda t: sign * _finite(fn(np.array([t]))),
                bounds=(lo, hi),
                method="bounded",
                options={"xatol": 1e-10 * max(1.0, abs(hi - lo))},
            )
            point = np.array([float(res.x)])
        else:
            res = minimize(
                lambda s: sign * _finite(fn(np.clip(s, lower, upper))),
                x0=start,
                method="Nelder-Mead",
                options={
                    "initial_simplex": np.array(
                        [start, start + [steps[0], 0.0], start + [0.0, steps[1]]]
                    ),
                    "xatol": 1e-9,
                    "fatol": 1e-12,
                    "maxiter": 400,
                },
            )
            point = np.clip(res.x, lower, upper)
        evaluations += int(res.nfev) + 1
        best.offer(fn(point), point)

    assert best.argument is not None
    return SearchResult(best.value, best.argument, grid_best, evaluations)
