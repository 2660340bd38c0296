from gaugekit.successive.cylinders import cylinder_circumradius, cylinder_inradius
from gaugekit.successive.profile import (
    CHAIN_SLACK,
    RadiiProfile,
    SuccessiveRadii,
    chain_checks,
    full_profile,
    successive_radius,
)
from gaugekit.successive.quantities import Quantity, all_quantities, chains
from gaugekit.successive.search import SearchResult, search_directions, search_offsets
from gaugekit.successive.sections import (
    longest_chord,
    section_circumradius,
    section_circumradius_extremal,
    section_inradius,
    section_inradius_extremal,
    segment_circumradius,
    segment_inradius,
)

__all__ = [
    "CHAIN_SLACK",
    "Quantity",
    "RadiiProfile",
    "SearchResult",
    "SuccessiveRadii",
    "all_quantities",
    "chain_checks",
    "chains",
    "cylinder_circumradius",
    "cylinder_inradius",
    "full_profile",
    "longest_chord",
    "search_directions",
    "search_offsets",
    "section_circumradius",
    "section_circumradius_extremal",
    "section_inradius",
    "section_inradius_extremal",
    "segment_circumradius",
    "segment_inradius",
    "successive_radius",
]
