"""
Circumradius and inradius against cylinders `C + L`.

`K ⊂ x + L + λC` only constrains `K` across `L`, so `R(K, C + L)` is the
circumradius of the orthogonal projections of `K` and `C` onto `L^⊥`, written in
an orthonormal basis of `L^⊥`. The per-vertex-shift LP of the definition is
kept as `method="lp"` and used to cross-check the projection.
"""

import logging
import math
import warnings
from typing import Literal

import numpy as np

from gaugekit.config import TOLERANCES
from gaugekit.errors import ComputationError, DegenerateBodyError, InputError
from gaugekit.geometry import Polytope, Subspace
from gaugekit.linprog import LpStatus, maximize
from gaugekit.measures import GaugeBody, circumradius, inradius
from gaugekit.measures.radii import circumradius_of_points
from gaugekit.types import Vector

logger = logging.getLogger(__name__)


def _check(K: Polytope, C: GaugeBody, L: Subspace) -> None:
    if K.dim != C.dim or L.dim_ambient != C.dim:
        raise InputError(
            f"dimension mismatch: K in R^{K.dim}, gauge in R^{C.dim}, L in R^{L.dim_ambient}"
        )


def cylinder_fit(K: Polytope, C: GaugeBody, L: Subspace) -> tuple[float, Vector | None]:
    """
    `R(K, C + L)` with an optimal center, by projection onto `L^⊥`.

    Returns:
        `tuple[float, Vector | None]`: the radius and a center `x` with
        `K ⊂ x + L + R C`. The center is `None` when `L` is the whole space.
    """
    _check(K, C, L)
    if K.is_empty:
        return 0.0, None
    if L.dim == 0:
        result = circumradius(K, C)
        return result.value, result.witness_center
    if L.dim == K.dim:
        return 0.0, None
    E = L.complement().basis
    projected = GaugeBody.from_points(C.vertices @ E.T)
    value, center = circumradius_of_points(K.vertices @ E.T, projected)
    return value, center @ E


def _cylinder_lp(K: Polytope, C: GaugeBody, L: Subspace) -> float:
    # variables: x (d), one shift t_k in L per vertex, λ
    V = K.vertices
    N = C.normals
    d, m = K.dim, L.dim
    n_v, n_f = len(V), len(N)
    NB = N @ L.basis.T
    rows = []
    for k in range(n_v):
        shifts = np.zeros((n_f, n_v * m))
        shifts[:, k * m : (k + 1) * m] = -NB
        rows.append(np.hstack([-N, shifts, -np.ones((n_f, 1))]))
    A = np.vstack(rows)
    b = -(V @ N.T).reshape(-1)
    objective = np.zeros(d + n_v * m + 1)
    objective[-1] = -1.0
    sol = maximize(objective, A, b)
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"cylinder LP ended {sol.status.value}")
    return max(0.0, float(sol.x[-1]))


def cylinder_circumradius(
    K: Polytope, C: GaugeBody, L: Subspace, method: Literal["projection", "lp"] = "projection"
) -> float:
    """
    Circumradius against a cylinder, $R(K, C + L) = \\min\\{\\lambda :
    \\exists x, K \\subset x + L + \\lambda C\\}$.

    Args:
        K (`Polytope`): any polytope. `R(Empty, C + L) = 0`.
        C (`GaugeBody`): the gauge.
        L (`Subspace`): the cylinder's axis space.
        method (`"projection" | "lp"`): `projection` solves the projected
            circumradius program in `L^⊥`; `lp` solves the defining program
            with one shift `t_k ∈ L` per vertex `v_k`.

    Returns:
        `float`: `R(K, C)` for `L = {0}` and `0` for `L = R^d`.
    """
    if method == "lp":
        _check(K, C, L)
        if K.is_empty or L.dim == K.dim:
            return 0.0
        return _cylinder_lp(K, C, L)
    if method != "projection":
        raise ValueError(f"unknown method {method!r}")
    return cylinder_fit(K, C, L)[0]


def _projected_inradius(K: Polytope, C: GaugeBody, L: Subspace) -> float:
    # x + λC ⊂ K + L iff the projections onto L^⊥ nest
    E = L.complement().basis
    projected = Polytope.from_points(K.vertices @ E.T)
    A, b = projected.hrep
    h = C.support(A @ E)
    objective = np.zeros(E.shape[0] + 1)
    objective[-1] = 1.0
    sol = maximize(objective, np.hstack([A, h[:, None]]), b)
    if sol.status is not LpStatus.OPTIMAL or sol.x is None:
        raise ComputationError(f"projected inradius LP ended {sol.status.value}")
    return float(sol.x[-1])


def cylinder_inradius(K: Polytope, C: GaugeBody, L: Subspace) -> float:
    """
    Inradius of a cylinder, $r(K + L, C) = R(C, K + L)^{-1}$.

    The dual circumradius is computed against `K` moved to its Chebyshev
    center, and the value is cross-checked by the inradius LP of the
    projections onto `L^⊥`. Disagreements emit a `RuntimeWarning`.

    Returns:
        `float`: `r(K, C)` for `L = {0}`, `math.inf` for `L = R^d`.

    Raises:
        DegenerateBodyError: if `K` is not full-dimensional.
    """
    _check(K, C, L)
    if not K.is_full_dimensional:
        raise DegenerateBodyError("cylinder inradii need a full-dimensional body")
    if L.dim == K.dim:
        return math.inf
    if L.dim == 0:
        return inradius(K, C).value
    K_gauge, _ = GaugeBody.recentered(K)
    outer, _ = cylinder_fit(C.body, K_gauge, L)
    value = 1.0 / outer
    direct = _projected_inradius(K, C, L)
    if abs(value - direct) > TOLERANCES.cross_check * max(1.0, value):
        message = f"cylinder inradius {value:.12g} vs projected LP {direct:.12g}"
        logger.warning(message)
        warnings.warn(message, RuntimeWarning, stacklevel=2)
    return value
