"""Anonymity, neutrality and symmetry groups of social preference functions."""

from .config import BoundExceeded, Settings, VerificationError, configured, settings
from .perm import Permutation, parse_cycles, parse_order, format_cycles, format_order
from .groups import GElement, PGroup, closure, parse_group, full_group, left_group, right_group, trivial
from .profiles import Profile, all_orbits, orbit_count, parse_profile
from .regularity import is_regular, is_regular_maximal, regular_minimal_overgroups
from .spf import Spf, anonymity_group, neutrality_group, symmetry_group, from_assignment, count_symmetric
from .extension import big_W, orbit_extension, is_O_fixed
from .classify import Verdict, classify_all, is_anonymity_group, is_neutrality_group, is_symmetry_group
from .boolean import BooleanFunction, invariance_group, is_2_representable, spf_from_boolean

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "Settings",
    "VerificationError",
    "configured",
    "settings",
    "Permutation",
    "parse_cycles",
    "parse_order",
    "format_cycles",
    "format_order",
    "GElement",
    "PGroup",
    "closure",
    "parse_group",
    "full_group",
    "left_group",
    "right_group",
    "trivial",
    "Profile",
    "all_orbits",
    "orbit_count",
    "parse_profile",
    "is_regular",
    "is_regular_maximal",
    "regular_minimal_overgroups",
    "Spf",
    "anonymity_group",
    "neutrality_group",
    "symmetry_group",
    "from_assignment",
    "count_symmetric",
    "big_W",
    "orbit_extension",
    "is_O_fixed",
    "Verdict",
    "classify_all",
    "is_anonymity_group",
    "is_neutrality_group",
    "is_symmetry_group",
    "BooleanFunction",
    "invariance_group",
    "is_2_representable",
    "spf_from_boolean",
]
