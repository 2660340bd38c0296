"""
Circumradii of sections `K ∩ (x + L)` and inradii against sections `C ∩ (x + L)`,
and their extremes over the offsets `x`.

Conventions: `R(Empty, C) = 0`, and `r(K, S) = inf` when the section `S` is
empty or a single point, so such offsets never attain an infimum.

Two shortcuts avoid general sections:

- Lines. `R([p, q], C) = γ_{C-C}(q - p)` and `r(K, [p, q]) = 1 / γ_{K-K}(q - p)`,
  so the extremes over parallel chords come from the longest chord, of length
  `1 / γ_{P-P}(w)` along `w`.
- Planes of R^3. The section by `<n, y> = s` is the hull of the crossing points
  of the edges of the body with the plane. The containment programs only use
  support values, so the crossing points are used without a hull.
"""

import logging
import math
from collections.abc import Callable
from typing import Literal

import numpy as np

from gaugekit.config import TOLERANCES, GridConfig, grid_from_env
from gaugekit.errors import ComputationError, DegenerateBodyError, InputError
from gaugekit.geometry import AffineFlat, Polytope, Subspace, difference_body, section
from gaugekit.linprog import LpStatus, maximize
from gaugekit.measures import GaugeBody, RadiiResult, circumradius, inradius
from gaugekit.measures.radii import circumradius_of_points
from gaugekit.successive.search import SearchResult, search_offsets
from gaugekit.types import MatrixArray, PointArray, Vector

logger = logging.getLogger(__name__)

Take = Literal["sup", "inf"]


def difference_gauge(P: Polytope) -> GaugeBody:
    """The gauge of the difference body `P - P`."""
    if not P.is_full_dimensional:
        raise DegenerateBodyError("the difference body of a lower-dimensional polytope is no gauge")
    return GaugeBody(difference_body(P))


def segment_circumradius(p: Vector, q: Vector, C_diff: GaugeBody) -> float:
    """`R([p, q], C) = γ_{C-C}(q - p)`, given the gauge of `C - C`."""
    return float(C_diff.gamma(np.asarray(q) - np.asarray(p))[0])


def segment_inradius(K_diff: GaugeBody, p: Vector, q: Vector) -> float:
    """`r(K, [p, q]) = 1 / γ_{K-K}(q - p)`, given the gauge of `K - K`."""
    g = float(K_diff.gamma(np.asarray(q) - np.asarray(p))[0])
    return math.inf if g == 0.0 else 1.0 / g


def chord_ratio(K_diff: GaugeBody, C_diff: GaugeBody, w: Vector) -> float:
    """
    $\\gamma_{C-C}(w) / \\gamma_{K-K}(w)$: both the largest `R(K ∩ (x + L), C)`
    and the smallest `r(K, C ∩ (x + L))` over offsets, for `L = span(w)`.
    """
    w = np.asarray(w, dtype=np.float64).reshape(1, -1)
    return float(C_diff.gamma(w)[0] / K_diff.gamma(w)[0])


def longest_chord(P: Polytope, w: Vector) -> tuple[Vector, float]:
    """
    A longest chord of `P` parallel to `w`.

    Solved as `maximize t` with `A q <= b` and `A (q + t w) <= b`.

    Returns:
        `tuple[Vector, float]`: its start `q` and length factor `t`, the chord
        being `[q, q + t w]`.
    """
    A, b = P.hrep
    d = P.dim
    Aw = A @ np.asarray(w, dtype=np.float64)
    M = np.vstack(
        [np.hstack([A, np.zeros((len(A), 1))]), np.hstack([A, Aw[:, None]])]
    )
    objective = np.zeros(d + 1)
    objective[-1] = 1.0
    sol = maximize(objective, M, np.concatenate([b, b]))
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"longest chord LP ended {sol.status.value}")
    return sol.x[:d], float(sol.x[-1])


def inradius_against_points(A: MatrixArray, b: Vector, points: PointArray) -> float:
    """
    `r(K, conv(points))` for `K = {y : A y <= b}`: `maximize λ` with
    `A y + λ h_S(A) <= b`. Empty point sets and single points give `inf`.
    """
    if len(points) == 0:
        return math.inf
    h = np.max(points @ A.T, axis=0)
    objective = np.zeros(A.shape[1] + 1)
    objective[-1] = 1.0
    sol = maximize(objective, np.hstack([A, h[:, None]]), b)
    if sol.status is LpStatus.UNBOUNDED:
        return math.inf
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"section inradius LP ended {sol.status.value}")
    return max(0.0, float(sol.x[-1]))


def section_circumradius(K: Polytope, C: GaugeBody, flat: AffineFlat) -> float:
    """`R(K ∩ flat, C)`, zero for empty sections."""
    return circumradius(section(K, flat), C).value


def section_inradius(K: Polytope, C: GaugeBody, flat: AffineFlat) -> float:
    """
    `r(K, C ∩ flat)`, infinite for empty or single point sections.

    Raises:
        DegenerateBodyError: if `K` is not full-dimensional.
    """
    if not K.is_full_dimensional:
        raise DegenerateBodyError("section inradii need a full-dimensional body")
    A, b = K.hrep
    return inradius_against_points(A, b, section(C.body, flat).vertices)


def plane_crossings(P: Polytope, normal: Vector, s: float) -> PointArray:
    """
    Points spanning `P ∩ {y : <normal, y> = s}`: vertices on the plane and
    crossings of the edges of `P`.
    """
    V = P.vertices
    heights = V @ normal - s
    tol = TOLERANCES.membership * max(1.0, float(np.max(np.abs(heights))))
    points = [V[np.abs(heights) <= tol]]
    for i, j in P.edges:
        hi, hj = heights[i], heights[j]
        if (hi < -tol and hj > tol) or (hi > tol and hj < -tol):
            t = hi / (hi - hj)
            points.append((V[i] + t * (V[j] - V[i]))[None, :])
    return np.vstack(points)


def _height_range(P: Polytope, normal: Vector) -> tuple[float, float]:
    heights = P.vertices @ normal
    return float(heights.min()), float(heights.max())


def plane_section_circumradius(
    K: Polytope, C: GaugeBody, normal: Vector, grid: GridConfig, take: Take = "sup"
) -> SearchResult:
    """Extremum over `s` of `R(K ∩ {<normal, y> = s}, C)`, searched."""
    lo, hi = _height_range(K, normal)

    def radius(s: Vector) -> float:
        points = plane_crossings(K, normal, float(s[0]))
        if len(points) == 0:
            return 0.0
        return circumradius_of_points(points, C)[0]

    return search_offsets(radius, np.array([lo]), np.array([hi]), grid, maximize=take == "sup")


def plane_section_inradius(
    K: Polytope, C: GaugeBody, normal: Vector, grid: GridConfig, take: Take = "inf"
) -> SearchResult:
    """Extremum over `s` of `r(K, C ∩ {<normal, y> = s})`, searched."""
    A, b = K.hrep
    lo, hi = _height_range(C.body, normal)

    def radius(s: Vector) -> float:
        return inradius_against_points(A, b, plane_crossings(C.body, normal, float(s[0])))

    return search_offsets(radius, np.array([lo]), np.array([hi]), grid, maximize=take == "sup")


def _searched(result: SearchResult, E: MatrixArray, L: Subspace) -> RadiiResult:
    return RadiiResult(
        max(0.0, result.value),
        method="searched",
        accuracy=result.accuracy,
        witness_center=result.argument @ E,
        witness_subspace=L,
    )


def _general_search(
    fn: Callable[[AffineFlat], float], body: Polytope, L: Subspace, grid: GridConfig, take: Take
) -> RadiiResult:
    E = L.complement().basis
    coords = body.vertices @ E.T
    result = search_offsets(
        lambda s: fn(AffineFlat(s @ E, L)),
        coords.min(axis=0),
        coords.max(axis=0),
        grid,
        maximize=take == "sup",
    )
    return _searched(result, E, L)


def _check(K: Polytope, C: GaugeBody, L: Subspace, take: str) -> None:
    if K.dim != C.dim or L.dim_ambient != C.dim:
        raise InputError(
            f"dimension mismatch: K in R^{K.dim}, gauge in R^{C.dim}, L in R^{L.dim_ambient}"
        )
    if take not in ("sup", "inf"):
        raise InputError(f"take must be 'sup' or 'inf', got {take!r}")


def section_circumradius_extremal(
    K: Polytope,
    C: GaugeBody,
    L: Subspace,
    take: Take = "sup",
    grid: GridConfig | None = None,
    method: Literal["auto", "general"] = "auto",
) -> RadiiResult:
    """
    Extremum over offsets `x` of `R(K ∩ (x + L), C)`.

    Offsets range over the bounding box of the projection of `K` onto `L^⊥`.
    With `method="auto"`, lines use the longest chord (exact for `take="sup"`)
    and planes of R^3 the crossing-point sections. `method="general"` always
    computes sections with `gaugekit.geometry.section`.

    Args:
        K (`Polytope`): the body.
        C (`GaugeBody`): the gauge.
        L (`Subspace`): direction space of the flats, `1 <= dim L <= d`.
        take (`"sup" | "inf"`): which extremum over offsets.
        grid (`GridConfig | None`): search grid, `GAUGEKIT_GRID` defaults if `None`.
        method (`"auto" | "general"`): section evaluation path.

    Returns:
        `RadiiResult`: the value, with the attaining offset point as
        `witness_center` and `L` as `witness_subspace`.
    """
    _check(K, C, L, take)
    grid = grid or grid_from_env()
    d, j = K.dim, L.dim
    if K.is_empty or j == 0:
        return RadiiResult(0.0, witness_subspace=L)
    if j == d:
        full = circumradius(K, C)
        return RadiiResult(full.value, witness_center=full.witness_center, witness_subspace=L)
    if method == "auto" and K.is_full_dimensional:
        if j == 1 and take == "sup":
            w = L.basis[0]
            value = chord_ratio(difference_gauge(K), difference_gauge(C.body), w)
            start, _ = longest_chord(K, w)
            return RadiiResult(value, witness_center=start, witness_subspace=L)
        if j == d - 1 and d == 3:
            normal = L.complement().basis[0]
            result = plane_section_circumradius(K, C, normal, grid, take)
            return RadiiResult(
                max(0.0, result.value),
                method="searched",
                accuracy=result.accuracy,
                witness_center=float(result.argument[0]) * normal,
                witness_subspace=L,
            )
    return _general_search(lambda flat: section_circumradius(K, C, flat), K, L, grid, take)


def section_inradius_extremal(
    K: Polytope,
    C: GaugeBody,
    L: Subspace,
    take: Take = "inf",
    grid: GridConfig | None = None,
    method: Literal["auto", "general"] = "auto",
) -> RadiiResult:
    """
    Extremum over offsets `x` of `r(K, C ∩ (x + L))`.

    Offsets range over the bounding box of the projection of `C` onto `L^⊥`;
    outside of it the section is empty and the inradius infinite. The fast
    paths mirror `section_circumradius_extremal`, with the longest chord of `C`
    being exact for `take="inf"`.

    Raises:
        DegenerateBodyError: if `K` is not full-dimensional.
    """
    _check(K, C, L, take)
    if not K.is_full_dimensional:
        raise DegenerateBodyError("section inradii need a full-dimensional body")
    grid = grid or grid_from_env()
    d, j = K.dim, L.dim
    if j == 0:
        return RadiiResult(math.inf, witness_subspace=L)
    if j == d:
        full = inradius(K, C)
        return RadiiResult(full.value, witness_center=full.witness_center, witness_subspace=L)
    if method == "auto":
        if j == 1 and take == "inf":
            w = L.basis[0]
            value = chord_ratio(difference_gauge(K), difference_gauge(C.body), w)
            start, _ = longest_chord(C.body, w)
            return RadiiResult(value, witness_center=start, witness_subspace=L)
        if j == d - 1 and d == 3:
            normal = L.complement().basis[0]
            result = plane_section_inradius(K, C, normal, grid, take)
            return RadiiResult(
                max(0.0, result.value),
                method="searched",
                accuracy=result.accuracy,
                witness_center=float(result.argument[0]) * normal,
                witness_subspace=L,
            )
    return _general_search(lambda flat: section_inradius(K, C, flat), C.body, L, grid, take)
