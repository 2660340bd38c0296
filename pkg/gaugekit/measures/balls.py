"""
Ball intersections and ball hulls.

For a gauge `C = {x : N x <= 1}`, the ball intersection of `K` is

    bi(K, C, λ) = ∩_{x ∈ K} (x - λC) = {y : K ⊂ y + λC}.

Since `K ⊂ y + λC` holds iff `<n_i, v - y> <= λ` for all vertices `v` of `K`,
only the vertex maximizing `<n_i, v>` matters for each facet, so

    bi(K, C, λ) = {y : -<n_i, y> <= λ - h_K(n_i)}

has one halfspace per facet of `C`. The ball hull is the intersection of all
translates `x + λC` covering `K`, i.e. `bh(K, C, λ) = bi(bi(K, C, λ), -C, λ)`.
"""

import logging

import numpy as np

from gaugekit.config import TOLERANCES
from gaugekit.errors import InputError, RadiusTooSmallError, UnboundedError
from gaugekit.geometry import (
    Polytope,
    convex_hull,
    halfspace_intersection,
    inclusion_gap,
    scale,
    translate,
)
from gaugekit.geometry.hull import extent
from gaugekit.measures.gauge import GaugeBody
from gaugekit.records import CheckResult, CheckStatus, at_most

logger = logging.getLogger(__name__)


def _check_pair(K: Polytope, C: GaugeBody) -> None:
    if K.dim != C.dim:
        raise InputError(f"K lives in R^{K.dim} but the gauge in R^{C.dim}")


def ball_intersect(K: Polytope, C: GaugeBody, lam: float) -> Polytope:
    """
    Ball intersection $bi(K, C, \\lambda) = \\bigcap_{x \\in K} (x - \\lambda C)$.

    Args:
        K (`Polytope`): a nonempty polytope.
        C (`GaugeBody`): the gauge.
        lam (`float`): the radius `λ >= 0`.

    Returns:
        `Polytope`: the centers `y` with `K ⊂ y + λC`. Empty when `λ < R(K, C)`,
        lower-dimensional when `λ = R(K, C)`.

    Raises:
        UnboundedError: if `K` is empty (the intersection is all of $\\mathbb{R}^d$).
    """
    _check_pair(K, C)
    if lam < 0:
        raise InputError(f"the radius must be nonnegative, got {lam}")
    if K.is_empty:
        raise UnboundedError("the ball intersection of the Empty set is all of R^d")
    N = C.normals
    h = np.max(K.vertices @ N.T, axis=0)
    return halfspace_intersection((-N, lam - h), K.dim)


def ball_hull(K: Polytope, C: GaugeBody, lam: float) -> Polytope:
    """
    Ball hull $bh(K, C, \\lambda)$, the intersection of all translates
    `x + λC` that contain `K`.

    Raises:
        RadiusTooSmallError: if `λ < R(K, C)`, so no translate covers `K`.
    """
    centers = ball_intersect(K, C, lam)
    if centers.is_empty:
        raise RadiusTooSmallError(
            f"λ={lam:.6g} is below the circumradius: no translate of λC covers K"
        )
    return ball_intersect(centers, C.reflect(), lam)


def max_pairwise_gamma(K: Polytope, C: GaugeBody) -> float:
    """$\\max_{x, y \\in K} \\gamma_C(x - y)$, attained at vertex pairs."""
    V = K.vertices
    diffs = (V[:, None, :] - V[None, :, :]).reshape(-1, K.dim)
    return float(np.max(C.gamma(diffs)))


def _sub_body(K: Polytope) -> Polytope:
    if len(K.vertices) > 2:
        return convex_hull(K.vertices[1:])
    center = K.centroid
    return translate(scale(translate(K, -center), 0.8), center)


def _inclusion(name: str, P: Polytope, Q: Polytope, tol: float) -> CheckResult:
    return at_most(name, inclusion_gap(P, Q), 0.0, tol)


def _covering_gap(hull: Polytope, centers: Polytope, C: GaugeBody, lam: float) -> float:
    # bh is covered by every translate x + λC with x in bi, and each facet of
    # bh lies on the boundary of one of them
    V = centers.vertices
    weights = np.random.default_rng(0).dirichlet(np.ones(len(V)), size=16)
    samples = np.vstack([V, weights @ V])
    covering = max(float(np.max(C.gamma(hull.vertices - x))) for x in samples) - lam
    if not hull.is_full_dimensional:
        return covering
    A, b = hull.hrep
    lowest = np.min(V @ A.T, axis=0) + lam * C.support(A)
    return max(covering, float(np.max(np.abs(lowest - b))))


def _equality(name: str, P: Polytope, Q: Polytope, tol: float) -> CheckResult:
    gap = max(inclusion_gap(P, Q), inclusion_gap(Q, P))
    return at_most(name, gap, 0.0, tol)


def verify_ball_algebra(K: Polytope, C: GaugeBody, lam: float) -> list[CheckResult]:
    """
    Evaluates the inclusion algebra of ball intersections and ball hulls at
    `(K, C, λ)`.

    Checks, all hard:

    - `ball.bi_centers`: every vertex `y` of `bi(K, C, λ)` has `K ⊂ y + λC`.
    - `ball.bh_contains_set`: `K ⊂ bh(K, C, λ)`.
    - `ball.subset_bi_antitone` / `ball.subset_bh_monotone`: for `K' ⊂ K ⊂ K''`,
      `bi(K'') ⊂ bi(K) ⊂ bi(K')` and `bh(K') ⊂ bh(K) ⊂ bh(K'')`.
    - `ball.radius_bi_monotone` / `ball.radius_bh_antitone`: for `λ' = 1.25 λ`,
      `bi(λ) ⊂ bi(λ')` and `bh(λ') ⊂ bh(λ)`.
    - `ball.bh_as_bi_of_bi`: `bh(K, C, λ) ⊂ x + λC` for the vertices `x` of
      `bi(K, C, λ)` and convex combinations of them, and every facet of
      `bh(K, C, λ)` is attained by one such translate.
    - `ball.bi_of_bh`: `bi(K, C, λ) = bi(bh(K, C, λ), C, λ)`.
    - `ball.diameter_bh_in_bi`: with `λ_D = max γ_C(x - y)` over `x, y ∈ K`,
      `bh(K, C, λ_D) ⊂ bi(K, -C, λ_D)`.
    - `ball.bh_idempotent`: `bh(bh(K, C, λ), C, λ) = bh(K, C, λ)`.
    - `ball.bi_is_bh_of_bi`: `bi(K, C, λ) = bh(bi(K, C, λ), -C, λ)`.

    Set relations are decided by vertex membership with tolerance
    `TOLERANCES.membership`, scaled by the size of the inputs.

    Raises:
        RadiusTooSmallError: if `λ < R(K, C)`.
    """
    tol = TOLERANCES.membership * max(1.0, extent(K.vertices), lam * extent(C.vertices))
    minus_C = C.reflect()
    bi = ball_intersect(K, C, lam)
    if bi.is_empty:
        raise RadiusTooSmallError(f"λ={lam:.6g} is below the circumradius")
    bh = ball_intersect(bi, minus_C, lam)
    checks: list[CheckResult] = []

    worst = float(np.max([np.max(C.gamma(K.vertices - y)) for y in bi.vertices]))
    checks.append(at_most("ball.bi_centers", worst, lam, tol))
    checks.append(_inclusion("ball.bh_contains_set", K, bh, tol))

    smaller = _sub_body(K)
    larger = convex_hull(np.vstack([K.vertices, bh.vertices[:1]]))
    bi_small, bi_large = ball_intersect(smaller, C, lam), ball_intersect(larger, C, lam)
    bh_small = ball_intersect(bi_small, minus_C, lam)
    bh_large = ball_intersect(bi_large, minus_C, lam)
    checks.append(
        at_most(
            "ball.subset_bi_antitone",
            max(inclusion_gap(bi_large, bi), inclusion_gap(bi, bi_small)),
            0.0,
            tol,
        )
    )
    checks.append(
        at_most(
            "ball.subset_bh_monotone",
            max(inclusion_gap(bh_small, bh), inclusion_gap(bh, bh_large)),
            0.0,
            tol,
        )
    )

    wider = 1.25 * lam
    bi_wide = ball_intersect(K, C, wider)
    checks.append(_inclusion("ball.radius_bi_monotone", bi, bi_wide, tol))
    bh_wide = ball_intersect(bi_wide, minus_C, wider)
    checks.append(_inclusion("ball.radius_bh_antitone", bh_wide, bh, 1.25 * tol))

    checks.append(at_most("ball.bh_as_bi_of_bi", _covering_gap(bh, bi, C, lam), 0.0, tol))
    checks.append(_equality("ball.bi_of_bh", bi, ball_intersect(bh, C, lam), tol))

    lam_d = max_pairwise_gamma(K, C)
    bh_d = ball_hull(K, C, lam_d)
    checks.append(_inclusion("ball.diameter_bh_in_bi", bh_d, ball_intersect(K, minus_C, lam_d), tol))

    checks.append(_equality("ball.bh_idempotent", ball_hull(bh, C, lam), bh, tol))
    checks.append(_equality("ball.bi_is_bh_of_bi", ball_hull(bi, minus_C, lam), bi, tol))

    failed = [c.name for c in checks if c.status is CheckStatus.FAIL]
    if failed:
        logger.warning("ball algebra failed at λ=%.6g: %s", lam, ", ".join(failed))
    return checks
