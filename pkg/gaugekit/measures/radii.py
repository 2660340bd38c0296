"""
Circumradius, inradius, their center sets, and the gauge diameter and width.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from gaugekit.config import TOLERANCES
from gaugekit.errors import ComputationError, DegenerateBodyError, InputError
from gaugekit.geometry import Polytope, Subspace, difference_body
from gaugekit.geometry.hull import extent
from gaugekit.linprog import LpStatus, maximize
from gaugekit.measures.balls import ball_intersect, max_pairwise_gamma
from gaugekit.measures.gauge import GaugeBody
from gaugekit.records import json_number
from gaugekit.types import PointArray, Vector

logger = logging.getLogger(__name__)

Method = Literal["exact", "searched"]


@dataclass(frozen=True)
class RadiiResult:
    """A computed size measure with its provenance."""

    value: float
    """Nonnegative value, possibly `math.inf`."""

    method: Method = "exact"
    """`exact` for closed forms and LPs, `searched` for grid searches."""

    accuracy: float = TOLERANCES.exact_accuracy
    """Error estimate. At most `TOLERANCES.exact_accuracy` for exact values."""

    witness_center: Vector | None = None
    """An optimal center (or, for section radii, the offset of the attaining flat)."""

    witness_subspace: Subspace | None = None
    """The attaining linear subspace, when the quantity extremizes over subspaces."""

    def __post_init__(self):
        if math.isnan(self.value) or self.value < 0:
            raise ValueError(f"a radius must be nonnegative, got {self.value}")
        if self.method not in ("exact", "searched"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == "exact" and self.accuracy > TOLERANCES.exact_accuracy:
            raise ValueError("exact results must have accuracy <= 1e-9")

    def to_json(self, quantity: str) -> dict[str, Any]:
        """The CLI result object, with infinite values written as `"inf"`."""
        return {
            "quantity": quantity,
            "value": json_number(float(self.value)),
            "method": self.method,
            "accuracy": json_number(float(self.accuracy)),
            "witness": {
                "center": None if self.witness_center is None else self.witness_center.tolist(),
                "subspace": None if self.witness_subspace is None else self.witness_subspace.to_json(),
            },
        }


def _check_pair(K: Polytope, C: GaugeBody) -> None:
    if K.dim != C.dim:
        raise InputError(f"K lives in R^{K.dim} but the gauge in R^{C.dim}")


def warn_disagreement(what: str, a: float, b: float) -> None:
    if math.isinf(a) and math.isinf(b):
        return
    if abs(a - b) > TOLERANCES.cross_check * max(1.0, abs(a), abs(b)):
        message = f"{what}: {a:.12g} vs {b:.12g}"
        logger.warning(message)
        warnings.warn(message, RuntimeWarning, stacklevel=3)


def circumradius_of_points(points: PointArray, C: GaugeBody) -> tuple[float, Vector]:
    """
    LP form of $R(\\mathrm{conv}\\,P, C) = \\min_x \\max_k \\gamma_C(p_k - x)$.

    The program is solved for the recentered gauge `C' = C - c`:
    `K ⊂ x + λC` iff `K ⊂ x' + λC'` with `x' = x + λc`, which reads
    `h_K(n'_i) - <n'_i, x'> <= λ` for the facet normals `n'_i` of `C'`.

    Returns:
        `tuple[float, Vector]`: the radius and an optimal center.
    """
    normals = C.centered_normals
    d = C.dim
    h = np.max(points @ normals.T, axis=0)
    A = np.hstack([-normals, -np.ones((len(normals), 1))])
    objective = np.zeros(d + 1)
    objective[-1] = -1.0
    sol = maximize(objective, A, -h)
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"circumradius LP ended {sol.status.value}")
    lam = max(0.0, float(sol.x[-1]))
    return lam, sol.x[:d] - lam * C.center


def circumradius(K: Polytope, C: GaugeBody) -> RadiiResult:
    """
    Circumradius $R(K, C) = \\min\\{\\lambda : \\exists x, K \\subset x + \\lambda C\\}$.

    Args:
        K (`Polytope`): any polytope. `R(Empty, C) = 0`.
        C (`GaugeBody`): the gauge.

    Returns:
        `RadiiResult`: the exact value with an optimal center as witness.

    Example:
        >>> K = Polytope.from_points([[0, 0], [1, 0], [1, 1], [0, 1]])
        >>> C = GaugeBody.from_points([[-1, -1], [1, -1], [1, 1], [-1, 1]])
        >>> circumradius(K, C).value
        0.5
    """
    _check_pair(K, C)
    if K.is_empty:
        return RadiiResult(0.0)
    value, center = circumradius_of_points(K.vertices, C)
    logger.debug("circumradius %.12g over %d vertices", value, len(K.vertices))
    return RadiiResult(value, witness_center=center)


def inradius(K: Polytope, C: GaugeBody) -> RadiiResult:
    """
    Inradius $r(K, C) = \\max\\{\\lambda : \\exists x, x + \\lambda C \\subset K\\}$.

    Solved by the LP `maximize λ` with `<a_i, x> + λ h_C(a_i) <= b_i` over the
    facets of `K`, and cross-checked against `1 / R(C, K)` whenever the vertices
    of `C` are available. A disagreement above `TOLERANCES.cross_check` emits a
    `RuntimeWarning`.

    Raises:
        DegenerateBodyError: if `K` is not full-dimensional.
    """
    _check_pair(K, C)
    if K.is_empty:
        raise DegenerateBodyError("the inradius of the Empty polytope is undefined")
    A, b = K.constraint_system
    h = C.support(A)
    d = K.dim
    objective = np.zeros(d + 1)
    objective[-1] = 1.0
    sol = maximize(objective, np.hstack([A, h[:, None]]), b)
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"inradius LP ended {sol.status.value}")
    value = float(sol.x[-1])
    if C.body.has_explicit_vertices:
        K_gauge, _ = GaugeBody.recentered(K)
        outer, _ = circumradius_of_points(C.vertices, K_gauge)
        warn_disagreement("inradius LP and 1/R(C, K) disagree", value, 1.0 / outer)
    return RadiiResult(value, witness_center=sol.x[:d])


def circumcenter_set(K: Polytope, C: GaugeBody) -> Polytope:
    """
    The circumcenters $cc(K, C) = \\{x : K \\subset x + R(K, C) C\\}$,
    computed as $bi(K, C, R(K, C))$. Its affine dimension is at most `d - 1`.
    """
    R = circumradius(K, C).value
    centers = ball_intersect(K, C, R)
    if centers.is_empty:
        bump = TOLERANCES.degeneracy * max(1.0, R)
        logger.debug("empty circumcenter set at R, retrying at R + %.1e", bump)
        centers = ball_intersect(K, C, R + bump)
    return centers


def incenter_set(K: Polytope, C: GaugeBody) -> Polytope:
    """
    The incenters $ic(K, C) = \\{y : y + r(K, C) C \\subset K\\}$, computed as
    $-r(K, C) \\cdot cc(C, K)$.

    `K` is moved so that its Chebyshev center `k` sits at the origin, which
    gives `cc(C, K) = cc(C, K - k) - R(C, K) k`. Each vertex of the result is
    checked to satisfy `y + rC ⊂ K`.

    Raises:
        DegenerateBodyError: if `K` is not full-dimensional.
    """
    _check_pair(K, C)
    if not K.is_full_dimensional:
        raise DegenerateBodyError("incenters need a full-dimensional body")
    K_gauge, k0 = GaugeBody.recentered(K)
    centers = circumcenter_set(C.body, K_gauge)
    R = circumradius(C.body, K_gauge).value
    r = 1.0 / R
    incenters = Polytope.from_points(k0 - r * centers.vertices)

    A, b = K.hrep
    h = C.support(A)
    slack = incenters.vertices @ A.T + r * h - b
    worst = float(np.max(slack))
    if worst > TOLERANCES.membership * max(1.0, extent(K.vertices)):
        message = f"incenter translate sticks out of K by {worst:.3e}"
        logger.warning(message)
        warnings.warn(message, RuntimeWarning, stacklevel=2)
    return incenters


def _line(direction: Vector) -> Subspace:
    return Subspace.spanned_by(direction[None, :], len(direction))


def diameter(K: Polytope, C: GaugeBody) -> RadiiResult:
    """
    Gauge diameter $D(K, C) = 2 \\max_{z \\in K - K} \\gamma_{C - C}(z)$, over
    the vertex differences of `K`.

    The witness subspace is the line spanned by an attaining difference.
    """
    _check_pair(K, C)
    if K.is_empty:
        raise ComputationError("the diameter of the Empty polytope is undefined")
    V = K.vertices
    diffs = (V[:, None, :] - V[None, :, :]).reshape(-1, K.dim)
    sym = GaugeBody(difference_body(C.body))
    values = sym.gamma(diffs)
    best = int(np.argmax(values))
    value = 2.0 * float(values[best])
    subspace = _line(diffs[best]) if value > 0 else None
    return RadiiResult(value, witness_subspace=subspace)


@dataclass(frozen=True)
class SupportRatio:
    """Extremes of $u \\mapsto h_{K-K}(u) / h_{C-C}(u)$ over unit vectors."""

    inf: float
    inf_direction: Vector
    sup: float
    sup_direction: Vector


def _unit_rows(vectors: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(vectors, axis=1)
    vectors = vectors[norms > 1e-12] / norms[norms > 1e-12, None]
    if len(vectors) == 0:
        return vectors
    # antipodal directions give the same ratio
    first = np.argmax(np.abs(vectors) > 1e-12, axis=1)
    signs = np.sign(vectors[np.arange(len(vectors)), first])
    return np.unique(np.round(vectors * signs[:, None], 12), axis=0)


def _edge_directions(P: Polytope) -> np.ndarray:
    if P.is_empty or P.affine_dim == 0:
        return np.zeros((0, P.dim))
    V = P.vertices
    return np.array([V[j] - V[i] for i, j in P.edges])


def candidate_directions(K: Polytope, C: GaugeBody) -> np.ndarray:
    """
    Unit directions containing the extremes of the support ratio.

    The ratio is linear-fractional on every cone of the common refinement of
    the normal fans of `K - K` and `C - C`, so its extremes sit on the rays of
    that refinement: edge normals in the plane; facet normals and cross products
    of edge directions in space.
    """
    d = K.dim
    if d == 1:
        return np.ones((1, 1))
    edges = np.vstack([_edge_directions(K), _edge_directions(C.body)])
    if d == 2:
        return _unit_rows(np.stack([-edges[:, 1], edges[:, 0]], axis=1))
    crosses = np.cross(edges[:, None, :], edges[None, :, :]).reshape(-1, 3)
    normals = [C.body.hrep[0]]
    if K.is_full_dimensional:
        normals.append(K.hrep[0])
    return _unit_rows(np.vstack([crosses, *normals]))


def support_ratio_extremes(K: Polytope, C: GaugeBody) -> SupportRatio:
    """
    Infimum and supremum over unit `u` of $h_{K-K}(u) / h_{C-C}(u)$, evaluated
    exactly on `candidate_directions`.
    """
    _check_pair(K, C)
    U = candidate_directions(K, C)
    ratios = support_ratio(K, C, U)
    lo, hi = int(np.argmin(ratios)), int(np.argmax(ratios))
    logger.debug("support ratio over %d candidate directions: [%.12g, %.12g]", len(U), ratios[lo], ratios[hi])
    return SupportRatio(float(ratios[lo]), U[lo], float(ratios[hi]), U[hi])


def support_ratio(K: Polytope, C: GaugeBody, directions: np.ndarray) -> np.ndarray:
    """$h_{K-K}(u) / h_{C-C}(u)$ for each row `u`."""
    directions = np.atleast_2d(directions)
    widths_K = np.ptp(K.vertices @ directions.T, axis=0)
    widths_C = np.ptp(C.vertices @ directions.T, axis=0)
    return widths_K / widths_C


def width(K: Polytope, C: GaugeBody) -> RadiiResult:
    """
    Gauge width $\\omega(K, C) = 2 \\inf_u h_{K-K}(u) / h_{C-C}(u)$.

    The witness subspace is the hyperplane orthogonal to an attaining `u`.
    """
    _check_pair(K, C)
    if K.is_empty:
        raise ComputationError("the width of the Empty polytope is undefined")
    extremes = support_ratio_extremes(K, C)
    return RadiiResult(
        2.0 * extremes.inf, witness_subspace=_line(extremes.inf_direction).complement()
    )


def circumradius_by_bisection(K: Polytope, C: GaugeBody, tol: float = 1e-9) -> float:
    """
    The smallest `λ` with a nonempty ball intersection `bi(K, C, λ)`, found by
    bisection on emptiness.
    """
    _check_pair(K, C)
    if K.is_empty:
        return 0.0
    lo, hi = 0.0, max_pairwise_gamma(K, C)
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if ball_intersect(K, C, mid).is_empty:
            lo = mid
        else:
            hi = mid
    return hi
