"""
Array-level convex hull and vertex enumeration routines.

Everything here works on plain numpy arrays. `gaugekit.geometry.polytope` wraps
the results into `Polytope` values.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from gaugekit.config import TOLERANCES
from gaugekit.errors import EmptyInputError, UnboundedError, UnsupportedDimensionError
from gaugekit.linprog import LinearProgram, LpStatus, solve
from gaugekit.types import MatrixArray, PointArray, Vector

logger = logging.getLogger(__name__)

MAX_EXPLICIT_DIM = 3
"""Largest ambient dimension with explicit hull and vertex operations."""


@dataclass(frozen=True)
class AffineFrame:
    """
    Orthonormal coordinates of an affine subspace: `origin + coords @ basis`.
    """

    origin: Vector
    """A point of the affine subspace, shape `(d,)`."""

    basis: MatrixArray
    """Orthonormal rows spanning the direction space, shape `(k, d)`."""

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def to_local(self, points: PointArray) -> PointArray:
        return (np.atleast_2d(points) - self.origin) @ self.basis.T

    def to_ambient(self, coords: PointArray) -> PointArray:
        coords = np.atleast_2d(np.asarray(coords, dtype=np.float64))
        coords = coords.reshape(len(coords), self.dim)
        return self.origin + coords @ self.basis

    def residual(self, points: PointArray) -> Vector:
        """Euclidean distance of each point to the affine subspace."""
        points = np.atleast_2d(points)
        return np.linalg.norm(points - self.to_ambient(self.to_local(points)), axis=1)


def check_dimension(d: int) -> None:
    if not 1 <= d <= MAX_EXPLICIT_DIM:
        raise UnsupportedDimensionError(
            f"explicit polytope operations support 1 <= d <= {MAX_EXPLICIT_DIM}, got d={d}"
        )


def extent(points: PointArray) -> float:
    """Length of the bounding box diagonal, a cheap proxy of the diameter."""
    if len(points) == 0:
        return 0.0
    return float(np.linalg.norm(points.max(axis=0) - points.min(axis=0)))


def affine_frame(points: PointArray, abs_tol: float = 0.0) -> AffineFrame:
    """
    Affine hull of a point cloud.

    Directions along which the cloud is thinner than
    `max(TOLERANCES.rank * diameter, abs_tol)` are dropped.

    Args:
        points (`PointArray`): nonempty cloud, shape `(n, d)`.
        abs_tol (`float`): absolute thickness tolerance.

    Returns:
        `AffineFrame`: an orthonormal frame of the affine hull. Full-dimensional
        clouds get the identity frame.
    """
    d = points.shape[1]
    origin = points.mean(axis=0)
    centered = points - origin
    tol = max(TOLERANCES.rank * extent(points), abs_tol)
    if len(points) == 1 or not np.any(np.abs(centered) > 0):
        return AffineFrame(origin, np.zeros((0, d)))
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    spans = np.ptp(centered @ vt.T, axis=0)
    rank = int(np.count_nonzero(spans > tol))
    if rank == d:
        return AffineFrame(np.zeros(d), np.eye(d))
    return AffineFrame(origin, vt[:rank])


def _cross(o: Vector, a: Vector, b: Vector) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def monotone_chain(points: PointArray) -> list[int]:
    """
    Andrew's monotone chain on planar points.

    Returns:
        `list[int]`: indices of the hull vertices, counterclockwise, starting at
        the lexicographic minimum. Collinear and duplicate points are dropped.
    """
    order = np.lexsort((points[:, 1], points[:, 0]))
    tol = 1e-12 * max(extent(points), 1e-300) ** 2

    def half(indices) -> list[int]:
        chain: list[int] = []
        for i in indices:
            while (
                len(chain) >= 2
                and _cross(points[chain[-2]], points[chain[-1]], points[i]) <= tol
            ):
                chain.pop()
            chain.append(int(i))
        return chain

    lower = half(order)
    upper = half(order[::-1])
    hull = lower[:-1] + upper[:-1]
    if not hull:
        return [int(order[0])]
    return hull


def _qhull(points: PointArray) -> ConvexHull:
    try:
        return ConvexHull(points)
    except QhullError:
        logger.debug("qhull failed on %d points, retrying with joggle", len(points))
        return ConvexHull(points, qhull_options="QJ")


def _full_hull_indices(points: PointArray) -> list[int]:
    d = points.shape[1]
    if d == 1:
        return sorted({int(np.argmin(points[:, 0])), int(np.argmax(points[:, 0]))})
    if d == 2:
        return monotone_chain(points)
    return [int(i) for i in _qhull(points).vertices]


def hull_vertices(
    points: PointArray, abs_tol: float = 0.0
) -> tuple[PointArray, AffineFrame]:
    """
    Extreme points of a point cloud in canonical order.

    2D full-dimensional hulls are ordered counterclockwise from the
    lexicographic minimum, everything else lexicographically.

    Args:
        points (`PointArray`): shape `(n, d)`, `d <= 3`.
        abs_tol (`float`): absolute thickness below which directions collapse.
            When positive, the returned vertices are snapped onto the affine hull.

    Returns:
        `tuple[PointArray, AffineFrame]`: vertices and affine hull.
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2 or len(points) == 0:
        raise EmptyInputError("cannot take the convex hull of an empty point set")
    d = points.shape[1]
    check_dimension(d)
    if not np.all(np.isfinite(points)):
        raise EmptyInputError("points must have finite coordinates")
    frame = affine_frame(points, abs_tol)
    k = frame.dim
    if k == 0:
        return frame.origin[None, :].copy(), frame
    if k == d:
        vertices = points[_full_hull_indices(points)]
        if d == 2:
            return vertices, frame
    else:
        local = frame.to_local(points)
        vertices = points[_full_hull_indices(local)]
        if abs_tol > 0.0:
            vertices = frame.to_ambient(frame.to_local(vertices))
    order = np.lexsort(vertices.T[::-1])
    return vertices[order], frame


def facets(vertices: PointArray) -> tuple[MatrixArray, Vector]:
    """
    Irredundant H-representation of a full-dimensional hull.

    Args:
        vertices (`PointArray`): canonical vertices from `hull_vertices`.

    Returns:
        `tuple[MatrixArray, Vector]`: unit outer normals `A` and offsets `b`.
    """
    d = vertices.shape[1]
    if d == 1:
        return np.array([[1.0], [-1.0]]), np.array(
            [vertices[:, 0].max(), -vertices[:, 0].min()]
        )
    if d == 2:
        edges = np.roll(vertices, -1, axis=0) - vertices
        normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        normals /= np.linalg.norm(normals, axis=1)[:, None]
        return normals, np.einsum("ij,ij->i", normals, vertices)
    hull = _qhull(vertices)
    normals, offsets = hull.equations[:, :-1], -hull.equations[:, -1]
    scale = max(extent(vertices), 1.0)
    kept: list[int] = []
    for i in range(len(normals)):
        if not any(
            np.allclose(normals[i], normals[k], atol=1e-9)
            and abs(offsets[i] - offsets[k]) <= 1e-9 * scale
            for k in kept
        ):
            kept.append(i)
    return normals[kept], offsets[kept]


def edges(vertices: PointArray, frame: AffineFrame) -> list[tuple[int, int]]:
    """
    Vertex index pairs of the hull's edges.
    In 3D, diagonals of non-triangular facets may be included.
    """
    k = frame.dim
    if k == 0:
        return []
    if k == 1:
        return [(0, len(vertices) - 1)]
    if k == 2:
        cycle = monotone_chain(frame.to_local(vertices))
        return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    pairs: set[tuple[int, int]] = set()
    for simplex in _qhull(vertices).simplices:
        a, b, c = (int(s) for s in simplex)
        for i, j in ((a, b), (b, c), (a, c)):
            pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def normalize_rows(A: MatrixArray, b: Vector) -> tuple[MatrixArray, Vector, bool]:
    """
    Scales constraints to unit normals and drops `0.x <= b` rows.

    Returns:
        `tuple[MatrixArray, Vector, bool]`: normalized `A`, `b` and whether a
        dropped row was violated (the system is then infeasible).
    """
    A = np.asarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    norms = np.linalg.norm(A, axis=1)
    zero = norms <= 1e-14
    infeasible = bool(np.any(b[zero] < -TOLERANCES.degeneracy * (1.0 + np.abs(b[zero]))))
    keep = ~zero
    return A[keep] / norms[keep, None], b[keep] / norms[keep], infeasible


def chebyshev_ball(A: MatrixArray, b: Vector) -> tuple[Vector, float]:
    """
    Center and radius of a largest ball inside `{x : A x <= b}` (unit rows).

    The radius is negative when the system is infeasible: it is then minus the
    smallest uniform relaxation making it feasible.

    Raises:
        UnboundedError: if the set contains arbitrarily large balls.
    """
    d = A.shape[1]
    objective = np.zeros(d + 1)
    objective[-1] = 1.0
    lp = LinearProgram(objective, np.hstack([A, np.ones((len(A), 1))]), b)
    sol = solve(lp)
    if sol.status is LpStatus.UNBOUNDED or sol.x is None:
        raise UnboundedError("the halfspace intersection is unbounded")
    return sol.x[:d], float(sol.x[-1])


def _polar_vertices_2d(A: MatrixArray, b: Vector, center: Vector) -> PointArray:
    polar = A / (b - A @ center)[:, None]
    cycle = monotone_chain(polar)
    if len(cycle) < 3:
        raise UnboundedError("the halfspace intersection is unbounded")
    vertices = []
    for i, j in zip(cycle, cycle[1:] + cycle[:1], strict=True):
        if _cross(polar[i], polar[j], np.zeros(2)) <= 0.0:
            raise UnboundedError("the halfspace intersection is unbounded")
        pair = A[[i, j]]
        if abs(np.linalg.det(pair)) < 1e-12:
            continue
        vertices.append(np.linalg.solve(pair, b[[i, j]]))
    return np.array(vertices).reshape(-1, 2)


def _polar_vertices_3d(A: MatrixArray, b: Vector, center: Vector) -> PointArray:
    polar = A / (b - A @ center)[:, None]
    try:
        hull = ConvexHull(polar)
    except QhullError as e:
        raise UnboundedError("the halfspace intersection is unbounded") from e
    normals, offsets = hull.equations[:, :-1], hull.equations[:, -1]
    if np.any(offsets >= -1e-14):
        raise UnboundedError("the halfspace intersection is unbounded")
    return center + normals / (-offsets)[:, None]


def _interval(A: MatrixArray, b: Vector) -> tuple[PointArray, float]:
    a = A[:, 0]
    if not (np.any(a > 0) and np.any(a < 0)):
        raise UnboundedError("the halfspace intersection is unbounded")
    hi = float(np.min(b[a > 0] / a[a > 0]))
    lo = float(np.max(b[a < 0] / a[a < 0]))
    tol = TOLERANCES.degeneracy * max(1.0, abs(lo), abs(hi))
    if lo > hi + tol:
        return np.zeros((0, 1)), 0.0
    if lo > hi:
        lo = hi = 0.5 * (lo + hi)
    return np.array([[lo], [hi]]), 0.0


def enumerate_vertices(A: MatrixArray, b: Vector) -> tuple[PointArray, float]:
    """
    Vertices of `{x : A x <= b}`, possibly lower-dimensional.

    A Chebyshev ball gives an interior point and vertices follow from the polar
    hull of the constraints around it. When the set is thinner than
    `TOLERANCES.degeneracy` (implicit equalities), all constraints are relaxed by
    twice that amount first. The caller collapses the resulting sliver with the
    returned tolerance.

    Args:
        A (`MatrixArray`): constraint normals, shape `(m, d)`.
        b (`Vector`): offsets, shape `(m,)`.

    Returns:
        `tuple[PointArray, float]`: candidate vertices (empty array when the set
        is empty) and the relaxation used.

    Raises:
        UnboundedError: if the set is unbounded.
    """
    d = A.shape[1]
    check_dimension(d)
    A, b, infeasible = normalize_rows(A, b)
    if infeasible:
        return np.zeros((0, d)), 0.0
    if len(A) == 0:
        raise UnboundedError("no constraints: the intersection is all of R^d")
    if d == 1:
        return _interval(A, b)

    center, radius = chebyshev_ball(A, b)
    scale = max(1.0, float(np.max(np.abs(b - A @ center))))
    tau = TOLERANCES.degeneracy * scale
    if radius < -tau:
        logger.debug("halfspace intersection empty (chebyshev radius %.3e)", radius)
        return np.zeros((0, d)), 0.0
    relax = 0.0
    if radius <= tau:
        relax = 2.0 * tau
        b = b + relax
        center, radius = chebyshev_ball(A, b)
        logger.debug("degenerate halfspace intersection, relaxed by %.3e", relax)
    polar = _polar_vertices_2d if d == 2 else _polar_vertices_3d
    vertices = polar(A, b, center)
    if len(vertices):
        slack = np.max(vertices @ A.T - b, axis=1)
        vertices = vertices[slack <= 1e3 * tau + relax]
    return vertices, relax
