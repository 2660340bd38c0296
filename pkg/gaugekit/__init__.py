from gaugekit.config import TOLERANCES, GridConfig, Tolerances, grid_from_env
from gaugekit.errors import (
    ComputationError,
    DegenerateBodyError,
    EmptyInputError,
    EmptySetError,
    GaugekitError,
    GeometryFormatError,
    InputError,
    InvalidGaugeError,
    NumericalFailureError,
    QuantityFormatError,
    RadiusTooSmallError,
    UnboundedError,
    UnsupportedDimensionError,
)
from gaugekit.fixtures import FIXTURES, Fixture, get_fixture, projected_cylinder_radii
from gaugekit.geometry import (
    AffineFlat,
    Halfspace,
    Polytope,
    Subspace,
    contains,
    convex_hull,
    halfspace_intersection,
    is_subset,
    load_polytope,
    minkowski_sum,
    polytope_from_json,
    polytope_to_json,
    section,
)
from gaugekit.linprog import LinearProgram, LpSolution, LpStatus, maximize, solve
from gaugekit.measures import (
    GaugeBody,
    RadiiResult,
    ball_hull,
    ball_intersect,
    circumcenter_set,
    circumradius,
    diameter,
    dist_to_flat,
    gamma,
    incenter_set,
    inradius,
    verify_ball_algebra,
    width,
)
from gaugekit.records import CheckResult, CheckStatus
from gaugekit.render import render_svg
from gaugekit.successive import (
    Quantity,
    RadiiProfile,
    SuccessiveRadii,
    cylinder_circumradius,
    cylinder_inradius,
    full_profile,
    section_circumradius,
    section_circumradius_extremal,
    section_inradius,
    section_inradius_extremal,
    successive_radius,
)
from gaugekit.verify import VerifyReport, run_verify
from gaugekit.version import __version__

__all__ = [
    "FIXTURES",
    "TOLERANCES",
    "AffineFlat",
    "CheckResult",
    "CheckStatus",
    "ComputationError",
    "DegenerateBodyError",
    "EmptyInputError",
    "EmptySetError",
    "Fixture",
    "GaugeBody",
    "GaugekitError",
    "GeometryFormatError",
    "GridConfig",
    "Halfspace",
    "InputError",
    "InvalidGaugeError",
    "LinearProgram",
    "LpSolution",
    "LpStatus",
    "NumericalFailureError",
    "Polytope",
    "Quantity",
    "QuantityFormatError",
    "RadiiProfile",
    "RadiiResult",
    "RadiusTooSmallError",
    "Subspace",
    "SuccessiveRadii",
    "Tolerances",
    "UnboundedError",
    "UnsupportedDimensionError",
    "VerifyReport",
    "__version__",
    "ball_hull",
    "ball_intersect",
    "circumcenter_set",
    "circumradius",
    "contains",
    "convex_hull",
    "cylinder_circumradius",
    "cylinder_inradius",
    "diameter",
    "dist_to_flat",
    "full_profile",
    "gamma",
    "get_fixture",
    "grid_from_env",
    "halfspace_intersection",
    "incenter_set",
    "inradius",
    "is_subset",
    "load_polytope",
    "maximize",
    "minkowski_sum",
    "polytope_from_json",
    "polytope_to_json",
    "projected_cylinder_radii",
    "render_svg",
    "run_verify",
    "section",
    "section_circumradius",
    "section_circumradius_extremal",
    "section_inradius",
    "section_inradius_extremal",
    "successive_radius",
    "verify_ball_algebra",
    "width",
]
