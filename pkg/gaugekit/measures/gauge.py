"""
Gauge bodies and their Minkowski functionals.
"""

import logging
from functools import cached_property

import numpy as np
import numpy.typing as npt

from gaugekit.config import TOLERANCES
from gaugekit.errors import (
    ComputationError,
    DegenerateBodyError,
    InvalidGaugeError,
    UnboundedError,
)
from gaugekit.geometry import AffineFlat, Halfspace, Polytope, reflect, translate
from gaugekit.geometry.hull import chebyshev_ball
from gaugekit.linprog import LpStatus, maximize
from gaugekit.types import MatrixArray, PointArray, Vector

logger = logging.getLogger(__name__)


class GaugeBody:
    """
    A full-dimensional polytope `C` with the origin in its interior, written as
    `C = {x : N x <= 1}`.

    The Minkowski functional is then
    $\\gamma_C(x) = \\max(0, \\max_i \\langle n_i, x \\rangle)$.
    """

    def __init__(self, body: Polytope) -> None:
        """
        Args:
            body (`Polytope`): the body `C`.

        Raises:
            InvalidGaugeError: if `body` is not full-dimensional or the origin
                is not in its interior.
        """
        try:
            A, b = body.constraint_system
        except (DegenerateBodyError, UnboundedError) as e:
            raise InvalidGaugeError(f"a gauge body must be full-dimensional and bounded: {e}") from e
        scale = max(1.0, float(np.max(np.abs(b))))
        if np.any(b <= TOLERANCES.degeneracy * scale):
            raise InvalidGaugeError(
                f"the origin is not an interior point of the gauge body "
                f"(smallest facet distance {float(b.min()):.3e})"
            )
        self.body = body
        """The polytope `C`."""
        self.normals: MatrixArray = A / b[:, None]
        """Rows `n_i` with `C = {x : N x <= 1}`."""
        self.dim = body.dim
        """Ambient dimension."""

    @classmethod
    def from_points(cls, points: npt.ArrayLike) -> "GaugeBody":
        return cls(Polytope.from_points(points))

    @classmethod
    def recentered(cls, body: Polytope) -> tuple["GaugeBody", Vector]:
        """
        Turns any full-dimensional polytope into a gauge by moving its
        Chebyshev center to the origin.

        Returns:
            `tuple[GaugeBody, Vector]`: the gauge `body - shift` and `shift`.

        Raises:
            DegenerateBodyError: if `body` is not full-dimensional.
        """
        A, b = body.constraint_system
        center, _ = chebyshev_ball(A, b)
        if body.has_explicit_vertices:
            return cls(translate(body, -center)), center
        return cls(Polytope.from_halfspaces(A, b - A @ center)), center

    @property
    def hrep_normalized(self) -> list[Halfspace]:
        """The halfspaces `<n_i, x> <= 1`."""
        return [Halfspace(n, 1.0) for n in self.normals]

    @cached_property
    def center(self) -> Vector:
        """
        Chebyshev center of `C`. Containment programs are solved for `C - center`
        so that they stay well conditioned for bodies whose origin is close to
        the boundary.
        """
        center, _ = chebyshev_ball(*self.body.constraint_system)
        return center

    @cached_property
    def centered_normals(self) -> MatrixArray:
        """Rows `n'_i` with `C - center = {x : N' x <= 1}`."""
        A, b = self.body.constraint_system
        return A / (b - A @ self.center)[:, None]

    @property
    def vertices(self) -> PointArray:
        return self.body.vertices

    def reflect(self) -> "GaugeBody":
        """The gauge `-C`."""
        if self.body.has_explicit_vertices:
            return GaugeBody(reflect(self.body))
        A, b = self.body.constraint_system
        return GaugeBody(Polytope.from_halfspaces(-A, b))

    def gamma(self, x: npt.ArrayLike) -> Vector:
        """Vectorized Minkowski functional over the rows of `x`."""
        points = np.atleast_2d(np.asarray(x, dtype=np.float64))
        return np.maximum(np.max(points @ self.normals.T, axis=1), 0.0)

    def support(self, directions: npt.ArrayLike) -> Vector:
        """
        $h_C(u)$ for each row `u` of `directions`. Uses the vertices when they
        are available and one LP per direction otherwise.
        """
        directions = np.atleast_2d(np.asarray(directions, dtype=np.float64))
        if self.body.has_explicit_vertices:
            return np.max(self.vertices @ directions.T, axis=0)
        values = []
        ones = np.ones(len(self.normals))
        for u in directions:
            sol = maximize(u, self.normals, ones)
            if sol.status is not LpStatus.OPTIMAL or sol.value is None:
                raise ComputationError(f"support LP of the gauge body ended {sol.status.value}")
            values.append(sol.value)
        return np.array(values)

    def contains(self, points: npt.ArrayLike, tol: float = 0.0) -> np.ndarray:
        """Whether `gamma(x) <= 1 + tol` for each row."""
        return self.gamma(points) <= 1.0 + tol

    def __repr__(self) -> str:
        return f"GaugeBody(dim={self.dim}, n_facets={len(self.normals)})"


def gamma(C: GaugeBody, x: npt.ArrayLike) -> float:
    """
    Minkowski functional $\\gamma_C(x) = \\inf\\{\\lambda > 0 : x \\in \\lambda C\\}$.

    Args:
        C (`GaugeBody`): the gauge.
        x (`npt.ArrayLike`): a point of $\\mathbb{R}^d$.

    Returns:
        `float`: nonnegative, zero at the origin, positively homogeneous.

    Example:
        >>> C = GaugeBody.from_points([[-1.0], [2.0]])
        >>> gamma(C, [1.0]), gamma(C, [-1.0])
        (0.5, 1.0)
    """
    return float(C.gamma(np.asarray(x, dtype=np.float64).reshape(1, -1))[0])


def dist_to_flat(C: GaugeBody, y: npt.ArrayLike, flat: AffineFlat) -> tuple[float, Vector]:
    """
    Gauge distance $\\mathrm{dist}_C(y, F) = \\inf_{z \\in F} \\gamma_C(y - z)$.

    Solved as the LP `minimize λ` over flat parameters `t` with
    `N (y - x - B^T t) <= λ`.

    Args:
        C (`GaugeBody`): the gauge.
        y (`npt.ArrayLike`): the point.
        flat (`AffineFlat`): the flat `x + L`.

    Returns:
        `tuple[float, Vector]`: the distance and a nearest point of the flat.
    """
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    B = flat.basis
    j = B.shape[0]
    offset = y - flat.point
    if j == 0:
        return gamma(C, offset), flat.point.copy()
    N = C.normals
    m = len(N)
    A = np.hstack([-N @ B.T, -np.ones((m, 1))])
    b = -N @ offset
    objective = np.zeros(j + 1)
    objective[-1] = -1.0
    sol = maximize(objective, A, b)
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"distance LP ended {sol.status.value}")
    nearest = flat.point + sol.x[:j] @ B
    value = max(0.0, float(sol.x[-1]))
    logger.debug("dist_C to a %d-flat: %.12g", j, value)
    return value, nearest
