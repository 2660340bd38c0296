from gaugekit.measures.balls import ball_hull, ball_intersect, verify_ball_algebra
from gaugekit.measures.gauge import GaugeBody, dist_to_flat, gamma
from gaugekit.measures.radii import (
    RadiiResult,
    SupportRatio,
    circumcenter_set,
    circumradius,
    circumradius_by_bisection,
    diameter,
    incenter_set,
    inradius,
    support_ratio_extremes,
    width,
)

__all__ = [
    "GaugeBody",
    "RadiiResult",
    "SupportRatio",
    "ball_hull",
    "ball_intersect",
    "circumcenter_set",
    "circumradius",
    "circumradius_by_bisection",
    "diameter",
    "dist_to_flat",
    "gamma",
    "incenter_set",
    "inradius",
    "support_ratio_extremes",
    "verify_ball_algebra",
    "width",
]
