from gaugekit.geometry.hull import MAX_EXPLICIT_DIM, AffineFrame
from gaugekit.geometry.io import (
    dump_polytope,
    load_polytope,
    polytope_from_json,
    polytope_to_json,
)
from gaugekit.geometry.operations import (
    affine_dim,
    contains,
    convex_hull,
    difference_body,
    halfspace_intersection,
    inclusion_gap,
    is_centrally_symmetric,
    is_subset,
    minkowski_sum,
    orthogonal_project,
    reflect,
    scale,
    section,
    support,
    translate,
    vertex_hausdorff,
    width_in_direction,
)
from gaugekit.geometry.polytope import AffineFlat, Halfspace, Polytope, Subspace

__all__ = [
    "MAX_EXPLICIT_DIM",
    "AffineFrame",
    "AffineFlat",
    "Halfspace",
    "Polytope",
    "Subspace",
    "affine_dim",
    "contains",
    "convex_hull",
    "difference_body",
    "dump_polytope",
    "halfspace_intersection",
    "inclusion_gap",
    "is_centrally_symmetric",
    "is_subset",
    "load_polytope",
    "minkowski_sum",
    "orthogonal_project",
    "polytope_from_json",
    "polytope_to_json",
    "reflect",
    "scale",
    "section",
    "support",
    "translate",
    "vertex_hausdorff",
    "width_in_direction",
]
