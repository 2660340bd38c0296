"""
The identity checks run by `run_verify`.

Checks are registered with `register`, which names every result the producer
returns. `run_verify` orders the results by the manifest, turns errors into
failed entries and forces `info` entries to the informational status.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from gaugekit.config import TOLERANCES, GridConfig, grid_from_env
from gaugekit.errors import DegenerateBodyError, GaugekitError, UnsupportedDimensionError
from gaugekit.geometry import Polytope, is_centrally_symmetric, scale, translate
from gaugekit.geometry.hull import chebyshev_ball, extent
from gaugekit.measures import (
    GaugeBody,
    RadiiResult,
    circumcenter_set,
    circumradius,
    circumradius_by_bisection,
    diameter,
    incenter_set,
    inradius,
    support_ratio_extremes,
    verify_ball_algebra,
    width,
)
from gaugekit.records import CheckResult, CheckStatus, at_most, compare
from gaugekit.successive import CHAIN_SLACK, RadiiProfile, SuccessiveRadii, full_profile
from gaugekit.verify.instances import instance_id
from gaugekit.verify.oracles import bisect_gamma, dense_ratio_scan, oracle_circumradius
from gaugekit.verify.report import VerifyReport, load_manifest

logger = logging.getLogger(__name__)


class VerifyContext:
    """The instance under test and the values shared between checks."""

    def __init__(self, K: Polytope, C: GaugeBody, seed: int, grid: GridConfig) -> None:
        self.K = K
        self.C = C
        self.seed = seed
        self.grid = grid
        self.d = K.dim
        self.rng = np.random.default_rng(seed)

    @cached_property
    def R(self) -> RadiiResult:
        return circumradius(self.K, self.C)

    @cached_property
    def r(self) -> RadiiResult:
        return inradius(self.K, self.C)

    @cached_property
    def scale(self) -> float:
        return max(1.0, self.R.value)

    @cached_property
    def K_gauge(self) -> GaugeBody:
        return GaugeBody.recentered(self.K)[0]

    @cached_property
    def profile(self) -> RadiiProfile:
        return full_profile(self.K, self.C, self.grid)

    @cached_property
    def swapped(self) -> SuccessiveRadii:
        return SuccessiveRadii(self.C.body, self.K_gauge, self.grid)


Producer = Callable[[VerifyContext], list[CheckResult]]


@dataclass(frozen=True)
class Registered:
    names: tuple[str, ...]
    produce: Producer


REGISTRY: list[Registered] = []


def register(*names: str) -> Callable[[Producer], Producer]:
    def wrap(fn: Producer) -> Producer:
        REGISTRY.append(Registered(names, fn))
        return fn

    return wrap


def _holds(name: str, ok: bool, lhs: float | str, rhs: float | str, detail: str = "") -> CheckResult:
    return CheckResult(name, lhs, rhs, 0.0, CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


def _measures(K: Polytope, C: GaugeBody) -> np.ndarray:
    """`R`, `r`, `D` and the width of `(K, C)`."""
    return np.array(
        [circumradius(K, C).value, inradius(K, C).value, diameter(K, C).value, width(K, C).value]
    )


def _profile_excess(base: RadiiProfile, other: RadiiProfile, factor: float) -> float:
    """
    Largest relative deviation of `other / factor` from `base` over every
    successive radius, beyond the accuracies both profiles report.
    """
    worst = 0.0
    for (q, mine), (_, theirs) in zip(base.entries, other.entries, strict=True):
        a, b = mine.value, theirs.value / factor
        if math.isinf(a) and math.isinf(b):
            continue
        slack = mine.accuracy + theirs.accuracy / factor
        excess = (abs(a - b) - slack) / max(1.0, abs(a))
        if excess > worst:
            logger.debug("%s moved by %.3e beyond its accuracy", q.name, excess)
            worst = excess
    return worst



def _profile_rise(base: RadiiProfile, other: RadiiProfile) -> float:
    """Largest relative amount by which an entry of `other` exceeds `base`, beyond the accuracies."""
    worst = 0.0
    for (q, mine), (_, theirs) in zip(base.entries, other.entries, strict=True):
        if math.isinf(mine.value):
            continue
        rise = theirs.value - mine.value - (mine.accuracy + theirs.accuracy)
        excess = rise / max(1.0, abs(mine.value))
        if excess > worst:
            logger.debug("%s grew by %.3e beyond its accuracy", q.name, excess)
            worst = excess
    return worst

@register("gamma.bisection")
def _gamma(ctx: VerifyContext) -> list[CheckResult]:
    points = ctx.rng.normal(size=(5, ctx.d))
    exact = ctx.C.gamma(points)
    bisected = np.array([bisect_gamma(ctx.C, x) for x in points])
    worst = float(np.max(np.abs(exact - bisected)))
    return [at_most("gamma.bisection", worst, 0.0, 1e-9 * max(1.0, float(exact.max())))]


@register("circumradius.equivalence", "circumradius.oracle", "circumradius.bisection")
def _circumradius(ctx: VerifyContext) -> list[CheckResult]:
    R = ctx.R.value
    center = ctx.R.witness_center
    attained = float(np.max(ctx.C.gamma(ctx.K.vertices - center))) if center is not None else 0.0
    return [
        compare("circumradius.equivalence", attained, R, TOLERANCES.exact_accuracy, relative=True),
        compare("circumradius.oracle", oracle_circumradius(ctx.K, ctx.C), R, 1e-4, relative=True),
        compare(
            "circumradius.bisection", circumradius_by_bisection(ctx.K, ctx.C), R, 1e-6, relative=True
        ),
    ]


@register("inradius.duality")
def _inradius(ctx: VerifyContext) -> list[CheckResult]:
    outer = circumradius(ctx.C.body, ctx.K_gauge).value
    return [compare("inradius.duality", ctx.r.value * outer, 1.0, 1e-8)]


@register("cc.nonempty", "cc.dimension")
def _circumcenters(ctx: VerifyContext) -> list[CheckResult]:
    cc = circumcenter_set(ctx.K, ctx.C)
    return [
        _holds("cc.nonempty", not cc.is_empty, len(cc.vertices), ">= 1"),
        at_most("cc.dimension", cc.affine_dim if not cc.is_empty else -1, ctx.d - 1, 0.0),
    ]


@register("incenter.identity", "ic.nonempty", "ic.dimension")
def _incenters(ctx: VerifyContext) -> list[CheckResult]:
    ic = incenter_set(ctx.K, ctx.C)
    A, b = ctx.K.hrep
    slack = ic.vertices @ A.T + ctx.r.value * ctx.C.support(A) - b if not ic.is_empty else np.zeros(1)
    tol = TOLERANCES.membership * max(1.0, extent(ctx.K.vertices))
    return [
        at_most("incenter.identity", float(np.max(slack)), 0.0, tol),
        _holds("ic.nonempty", not ic.is_empty, len(ic.vertices), ">= 1"),
        at_most("ic.dimension", ic.affine_dim if not ic.is_empty else -1, ctx.d - 1, 0.0),
    ]


@register("symmetry.cc", "symmetry.ic")
def _symmetry(ctx: VerifyContext) -> list[CheckResult]:
    symmetric = (
        is_centrally_symmetric(ctx.K) is not None
        and is_centrally_symmetric(ctx.C.body) is not None
    )
    if not symmetric:
        note = "inputs are not both centrally symmetric"
        return [_holds(name, True, "n/a", "n/a", note) for name in ("symmetry.cc", "symmetry.ic")]
    results = []
    for name, centers in (
        ("symmetry.cc", circumcenter_set(ctx.K, ctx.C)),
        ("symmetry.ic", incenter_set(ctx.K, ctx.C)),
    ):
        ok = is_centrally_symmetric(centers, tol=TOLERANCES.membership) is not None
        results.append(_holds(name, ok, "symmetric" if ok else "asymmetric", "symmetric"))
    return results


_BALL_CHECKS = (
    "ball.bi_centers",
    "ball.bh_contains_set",
    "ball.subset_bi_antitone",
    "ball.subset_bh_monotone",
    "ball.radius_bi_monotone",
    "ball.radius_bh_antitone",
    "ball.bh_as_bi_of_bi",
    "ball.bi_of_bh",
    "ball.diameter_bh_in_bi",
    "ball.bh_idempotent",
    "ball.bi_is_bh_of_bi",
)


@register(*_BALL_CHECKS)
def _balls(ctx: VerifyContext) -> list[CheckResult]:
    R = ctx.R.value
    return verify_ball_algebra(ctx.K, ctx.C, 1.25 * R if R > 0 else 1.0)


def _agreement(name: str, values: list[RadiiResult], target: float, scale_: float) -> CheckResult:
    exact = all(v.method == "exact" for v in values)
    tol = (1e-8 if exact else CHAIN_SLACK) * scale_
    worst = max(abs(v.value - target) for v in values)
    return at_most(name, worst, 0.0, tol)


@register(
    "radii.circumradius_collapse",
    "radii.inradius_collapse",
    "radii.half_width",
    "radii.half_diameter",
    "radii.r_pi_closed_form",
)
def _closed_forms(ctx: VerifyContext) -> list[CheckResult]:
    p, d = ctx.profile, ctx.d
    collapse_R = [p[f"R-{m}-{s}:{d}"] for m in ("pi", "sigma") for s in ("sup", "inf")]
    collapse_r = [p[f"r-{m}-{s}:{d}"] for m in ("pi", "sigma") for s in ("sup", "inf")]
    half_width = [p["R-pi-inf:1"], p["R-sigma-inf:1"], p["r-pi-inf:1"], p["r-sigma-inf:1"]]
    half_diameter = [p["R-pi-sup:1"], p["R-sigma-sup:1"], p["r-sigma-sup:1"]]
    ratio = support_ratio_extremes(ctx.K, ctx.C)
    return [
        _agreement("radii.circumradius_collapse", collapse_R, ctx.R.value, ctx.scale),
        _agreement("radii.inradius_collapse", collapse_r, ctx.r.value, ctx.scale),
        _agreement("radii.half_width", half_width, width(ctx.K, ctx.C).value / 2, ctx.scale),
        _agreement("radii.half_diameter", half_diameter, diameter(ctx.K, ctx.C).value / 2, ctx.scale),
        compare("radii.r_pi_closed_form", p["r-pi-sup:1"].value, ratio.sup, 1e-4, relative=True),
    ]


def _scan_tolerance(d: int) -> float:
    # resolution of the scan at a kink of the ratio
    return 1e-4 if d <= 2 else 2e-2


@register("width.dense_scan", "diameter.dense_scan")
def _dense_scans(ctx: VerifyContext) -> list[CheckResult]:
    n = 100_000 if ctx.d <= 2 else 20_000
    low, high = dense_ratio_scan(ctx.K, ctx.C, n)
    half_width = width(ctx.K, ctx.C).value / 2
    half_diameter = diameter(ctx.K, ctx.C).value / 2
    eps = TOLERANCES.exact_accuracy * ctx.scale
    tol = _scan_tolerance(ctx.d) * ctx.scale
    return [
        _holds(
            "width.dense_scan",
            -eps <= low - half_width <= tol,
            low,
            half_width,
            "no sampled direction may beat the exact infimum",
        ),
        _holds(
            "diameter.dense_scan",
            -eps <= half_diameter - high <= tol,
            high,
            half_diameter,
            "no sampled direction may beat the exact supremum",
        ),
    ]


@register(*(f"chain.{f}-{m}-{s}" for f in ("R", "r") for m in ("pi", "sigma") for s in ("sup", "inf")))
def _chains(ctx: VerifyContext) -> list[CheckResult]:
    return list(ctx.profile.checks)


@register("duality.pi_sup", "duality.pi_inf")
def _duality(ctx: VerifyContext) -> list[CheckResult]:
    p, swapped = ctx.profile, ctx.swapped
    results = []
    for name, mine, theirs in (
        ("duality.pi_sup", "r-pi-sup", "R-pi-inf"),
        ("duality.pi_inf", "r-pi-inf", "R-pi-sup"),
    ):
        worst = max(
            abs(p[f"{mine}:{j}"].value * swapped.radius(f"{theirs}:{j}").value - 1.0)
            for j in range(1, ctx.d + 1)
        )
        results.append(at_most(name, worst, 0.0, 1e-6))
    return results


@register(
    "invariance.translation",
    "invariance.scaling",
    "invariance.hull",
    "invariance.monotonicity",
)
def _invariance(ctx: VerifyContext) -> list[CheckResult]:
    K, C, d = ctx.K, ctx.C, ctx.d
    base = _measures(K, C)
    size = float(np.max(base))

    shift_K = ctx.rng.normal(size=d)
    center, radius = chebyshev_ball(*C.body.hrep)
    u = ctx.rng.normal(size=d)
    u /= np.linalg.norm(u)
    # -shift stays interior: it lies between 0 and a point of the Chebyshev ball
    shift_C = -(0.5 * center + 0.25 * radius * u)
    moved_K, moved_C = translate(K, shift_K), GaugeBody(translate(C.body, shift_C))
    moved = _measures(moved_K, moved_C)
    moved_profile = _profile_excess(ctx.profile, full_profile(moved_K, moved_C, ctx.grid), 1.0)

    alpha, beta = 1.7, 0.6
    scaled_K, scaled_C = scale(K, alpha), GaugeBody(scale(C.body, beta))
    scaled = _measures(scaled_K, scaled_C) * beta / alpha
    scaled_profile = _profile_excess(
        ctx.profile, full_profile(scaled_K, scaled_C, ctx.grid), alpha / beta
    )

    V = K.vertices
    midpoints = 0.5 * (V + np.roll(V, 1, axis=0))
    rehulled = _measures(Polytope.from_points(np.vstack([V, midpoints])), C)

    c = K.centroid
    shrunk = translate(scale(translate(K, -c), 0.8), c)
    enlarged_C = GaugeBody(scale(C.body, 1.2))
    smaller = _measures(shrunk, enlarged_C)
    smaller_profile = _profile_rise(ctx.profile, full_profile(shrunk, enlarged_C, ctx.grid))

    return [
        at_most(
            "invariance.translation",
            max(float(np.max(np.abs(moved - base))) / max(1.0, size), moved_profile),
            0.0,
            1e-7,
        ),
        at_most(
            "invariance.scaling",
            max(float(np.max(np.abs(scaled - base))) / max(1.0, size), scaled_profile),
            0.0,
            1e-6,
        ),
        at_most("invariance.hull", float(np.max(np.abs(rehulled - base))), 0.0, 1e-9 * max(1.0, size)),
        at_most(
            "invariance.monotonicity",
            max(float(np.max(smaller - base)) / max(1.0, size), smaller_profile),
            0.0,
            TOLERANCES.exact_accuracy,
        ),
    ]


@register("info.r_pi_vs_half_diameter")
def _open_question(ctx: VerifyContext) -> list[CheckResult]:
    r_pi = ctx.profile["r-pi-sup:1"].value
    half_diameter = diameter(ctx.K, ctx.C).value / 2
    return [
        CheckResult(
            "info.r_pi_vs_half_diameter",
            r_pi,
            half_diameter,
            CHAIN_SLACK,
            CheckStatus.INFO,
            f"difference {r_pi - half_diameter:.3e}",
        )
    ]


def _run(entry: Registered, ctx: VerifyContext) -> list[CheckResult]:
    try:
        results = entry.produce(ctx)
    except DegenerateBodyError as e:
        return [
            CheckResult(name, "n/a", "n/a", 0.0, CheckStatus.INFO, f"not applicable: {e}")
            for name in entry.names
        ]
    except (GaugekitError, ArithmeticError, ValueError, np.linalg.LinAlgError) as e:
        logger.warning("checks %s raised %s: %s", ", ".join(entry.names), type(e).__name__, e)
        return [
            CheckResult(name, "error", "n/a", 0.0, CheckStatus.FAIL, f"{type(e).__name__}: {e}")
            for name in entry.names
        ]
    produced = {r.name for r in results}
    if produced != set(entry.names):
        raise RuntimeError(f"check producer returned {sorted(produced)}, registered {entry.names}")
    return results


def run_verify(
    K: Polytope, C: GaugeBody, seed: int = 0, grid: GridConfig | None = None
) -> VerifyReport:
    """
    Runs every registered check on `(K, C)`.

    Failures are recorded in the report, never raised. Checks needing a
    full-dimensional `K` are reported as not applicable (informational) when
    it is not.

    Args:
        K (`Polytope`): the body, `d <= 3`.
        C (`GaugeBody`): the gauge.
        seed (`int`): seed of the randomized parts (test points, translations).
        grid (`GridConfig | None`): search grids, `GAUGEKIT_GRID` defaults if `None`.

    Returns:
        `VerifyReport`: one entry per manifest check, in manifest order.

    Raises:
        UnsupportedDimensionError: for `d > 3`.
    """
    if K.dim > 3:
        raise UnsupportedDimensionError(f"verification supports d <= 3, got d={K.dim}")
    ctx = VerifyContext(K, C, seed, grid or grid_from_env())
    by_name: dict[str, CheckResult] = {}
    for entry in REGISTRY:
        for result in _run(entry, ctx):
            by_name[result.name] = result

    checks = []
    for item in load_manifest():
        result = by_name.pop(item.name, None)
        if result is None:
            result = CheckResult(item.name, "n/a", "n/a", 0.0, CheckStatus.FAIL, "not evaluated")
        elif item.kind == "info" and result.status is not CheckStatus.INFO:
            result = CheckResult(
                result.name, result.lhs, result.rhs, result.tolerance, CheckStatus.INFO, result.detail
            )
        checks.append(result)
    if by_name:
        raise RuntimeError(f"checks missing from the manifest: {sorted(by_name)}")

    report = VerifyReport(instance_id(K, C), seed, checks)
    failures = report.hard_failures
    if failures:
        logger.warning("%d hard failures: %s", len(failures), ", ".join(c.name for c in failures))
    else:
        logger.info("all %d checks passed on %s", len(checks), report.instance_id[:12])
    return report

