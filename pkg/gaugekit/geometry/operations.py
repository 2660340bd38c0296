"""
Polytope operations: hulls, halfspace intersections, Minkowski algebra, sections,
projections, support functions and membership tests.
"""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from scipy.linalg import null_space

from gaugekit.config import TOLERANCES
from gaugekit.errors import EmptyInputError, EmptySetError
from gaugekit.geometry.hull import check_dimension, enumerate_vertices, extent
from gaugekit.geometry.polytope import AffineFlat, Halfspace, Polytope, Subspace
from gaugekit.types import Vector


def convex_hull(points: npt.ArrayLike) -> Polytope:
    """
    Convex hull of a nonempty finite point set (`d <= 3`).

    Args:
        points (`npt.ArrayLike`): shape `(n, d)`.

    Returns:
        `Polytope`: vertices are the extreme points of the input.

    Raises:
        EmptyInputError: for an empty point set.
    """
    points = np.asarray(points, dtype=np.float64)
    if points.size == 0:
        raise EmptyInputError("cannot take the convex hull of an empty point set")
    points = np.atleast_2d(points)
    check_dimension(points.shape[1])
    return Polytope.from_points(points)


def halfspace_intersection(
    halfspaces: Sequence[Halfspace] | tuple[npt.ArrayLike, npt.ArrayLike], dim: int
) -> Polytope:
    """
    Intersection of halfspaces, with vertices enumerated eagerly.

    Args:
        halfspaces (`Sequence[Halfspace] | tuple[npt.ArrayLike, npt.ArrayLike]`):
            `Halfspace` values or an `(A, b)` pair.
        dim (`int`): ambient dimension.

    Returns:
        `Polytope`: the intersection, `Polytope.empty(dim)` when it is empty.

    Raises:
        UnboundedError: if the intersection is unbounded.
    """
    if isinstance(halfspaces, tuple):
        A = np.asarray(halfspaces[0], dtype=np.float64).reshape(-1, dim)
        b = np.asarray(halfspaces[1], dtype=np.float64).reshape(-1)
    else:
        A = np.array([h.a for h in halfspaces], dtype=np.float64).reshape(-1, dim)
        b = np.array([h.b for h in halfspaces], dtype=np.float64)
    polytope = Polytope.from_halfspaces(A, b)
    _ = polytope.vertices
    return polytope


def translate(P: Polytope, t: npt.ArrayLike) -> Polytope:
    if P.is_empty:
        return P
    return Polytope(P.dim, P.vertices + np.asarray(t, dtype=np.float64), None)


def scale(P: Polytope, alpha: float) -> Polytope:
    """`alpha * P`. Negative factors reflect through the origin."""
    if P.is_empty:
        return P
    return Polytope.from_points(alpha * P.vertices)


def reflect(P: Polytope) -> Polytope:
    """`-P`."""
    return scale(P, -1.0)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    """
    `P + Q`, the hull of pairwise vertex sums. `minkowski_sum(P, reflect(Q))`
    is the difference body `P - Q`.
    """
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.dim)
    sums = P.vertices[:, None, :] + Q.vertices[None, :, :]
    return Polytope.from_points(sums.reshape(-1, P.dim))


def difference_body(P: Polytope) -> Polytope:
    """`P - P`, a polytope symmetric about the origin."""
    return minkowski_sum(P, reflect(P))


def support(P: Polytope, u: npt.ArrayLike) -> float:
    """
    Support function $h_P(u) = \\max_{v \\in P} \\langle u, v \\rangle$.

    Raises:
        EmptySetError: if `P` is empty.
    """
    if P.is_empty:
        raise EmptySetError("support function of the Empty polytope")
    return float(np.max(P.vertices @ np.asarray(u, dtype=np.float64)))


def width_in_direction(P: Polytope, directions: npt.ArrayLike) -> Vector:
    """$h_{P-P}(u) = h_P(u) + h_P(-u)$ for each row `u` of `directions`."""
    values = P.vertices @ np.atleast_2d(np.asarray(directions, dtype=np.float64)).T
    return values.max(axis=0) - values.min(axis=0)


def affine_dim(P: Polytope) -> int:
    """
    Dimension of the affine hull of `P`.

    Raises:
        EmptySetError: if `P` is empty.
    """
    return P.affine_dim


def orthogonal_project(P: Polytope, L: Subspace) -> Polytope:
    """Orthogonal projection of `P` onto `L`, in ambient coordinates."""
    if P.is_empty:
        return P
    return Polytope.from_points(P.vertices @ L.projector)


def section(P: Polytope, flat: AffineFlat) -> Polytope:
    """
    `P ∩ flat` in ambient coordinates; `Polytope.empty` when they are disjoint.

    Args:
        P (`Polytope`): any polytope, possibly lower-dimensional.
        flat (`AffineFlat`): the flat `x + L`.

    Returns:
        `Polytope`: the section, whose affine dimension may be below `dim(L)`.
    """
    d = P.dim
    if P.is_empty:
        return P
    j = flat.direction.dim
    if j == d:
        return P
    if j == 0:
        inside = contains(P, flat.point, TOLERANCES.membership)[0]
        return Polytope.from_points(flat.point[None, :]) if inside else Polytope.empty(d)

    frame = P.frame
    A_f, b_f = P.frame_hrep
    scale_ = max(1.0, extent(P.vertices), float(np.max(np.abs(P.vertices))))
    if P.is_full_dimensional:
        base = flat.point
        directions = flat.basis
        A_s = A_f @ directions.T
        b_s = b_f - A_f @ base
    else:
        k = frame.dim
        system = np.hstack([frame.basis.T, -flat.basis.T])
        rhs = flat.point - frame.origin
        z0, *_ = np.linalg.lstsq(system, rhs, rcond=None)
        if np.linalg.norm(system @ z0 - rhs) > TOLERANCES.membership * scale_:
            return Polytope.empty(d)
        kernel = null_space(system, rcond=1e-10)
        y0, y_dirs = z0[:k], kernel[:k]
        base = frame.origin + y0 @ frame.basis
        directions = (y_dirs.T @ frame.basis).reshape(-1, d)
        b_s = b_f - A_f @ y0 if k else np.zeros(0)
        A_s = A_f @ y_dirs if k else np.zeros((0, kernel.shape[1]))
        if kernel.shape[1] == 0:
            if k and np.any(A_f @ y0 > b_f + TOLERANCES.membership):
                return Polytope.empty(d)
            return Polytope.from_points(base[None, :])

    params, relax = enumerate_vertices(A_s, b_s)
    if len(params) == 0:
        return Polytope.empty(d)
    points = base + params @ directions
    return Polytope.from_points(points, abs_tol=10.0 * relax)


def contains(P: Polytope, points: npt.ArrayLike, tol: float = 0.0) -> np.ndarray:
    """
    Membership test of each point in `P`, within Euclidean tolerance `tol`.

    Args:
        P (`Polytope`): any polytope.
        points (`npt.ArrayLike`): shape `(n, d)` or `(d,)`.
        tol (`float`): tolerance.

    Returns:
        `np.ndarray`: boolean array of shape `(n,)`.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if P.is_empty:
        return np.zeros(len(pts), dtype=bool)
    frame = P.frame
    inside = frame.residual(pts) <= tol
    A_f, b_f = P.frame_hrep
    if len(A_f):
        local = frame.to_local(pts)
        inside &= np.all(local @ A_f.T <= b_f + tol, axis=1)
    return inside


def inclusion_gap(P: Polytope, Q: Polytope) -> float:
    """
    How far the vertices of `P` stick out of `Q`: the largest distance to the
    affine hull of `Q` or facet violation inside it. Zero when `P ⊂ Q`.
    """
    if P.is_empty:
        return 0.0
    if Q.is_empty:
        return float("inf")
    frame = Q.frame
    gap = float(np.max(frame.residual(P.vertices)))
    A_f, b_f = Q.frame_hrep
    if len(A_f):
        slack = frame.to_local(P.vertices) @ A_f.T - b_f
        gap = max(gap, float(np.max(slack)))
    return max(gap, 0.0)


def is_subset(P: Polytope, Q: Polytope, tol: float = TOLERANCES.membership) -> bool:
    """Whether `P ⊂ Q`, tested on the vertices of `P`."""
    return inclusion_gap(P, Q) <= tol


def vertex_hausdorff(P: Polytope, Q: Polytope) -> float:
    """Hausdorff distance between the vertex sets of `P` and `Q`."""
    if P.is_empty and Q.is_empty:
        return 0.0
    if P.is_empty or Q.is_empty:
        return float("inf")
    dists = np.linalg.norm(P.vertices[:, None, :] - Q.vertices[None, :, :], axis=2)
    return float(max(dists.min(axis=1).max(), dists.min(axis=0).max()))


def is_centrally_symmetric(P: Polytope, tol: float = 1e-9) -> Vector | None:
    """
    Center of symmetry of `P`, or `None` when `P` is not centrally symmetric.
    """
    if P.is_empty:
        return None
    center = P.centroid
    reflected = 2.0 * center - P.vertices
    tol = tol * max(1.0, extent(P.vertices))
    dists = np.linalg.norm(reflected[:, None, :] - P.vertices[None, :, :], axis=2)
    if np.all(dists.min(axis=1) <= tol):
        return center
    return None

