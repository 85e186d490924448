"""Root systems, Weyl groups and Schubert variety classification."""

from .bruhat import bruhat_leq, interval, is_boolean_interval, lower_interval
from .cartan import CartanType, RootSystem, build_root_system, cartan_matrix
from .classify import (Classification, classify_full, construct_prescribed, count_closed_orbits,
                       is_doubly_spherical, is_horospherical, is_nearly_toric,
                       is_nonsingular_horospherical, is_simple_variety, is_spherical, is_toric,
                       is_wonderful)
from .errors import CapExceeded, InternalInconsistency, SchubertError, UserError
from .lattice import IsogenyType, character_lattice, kernel_report, smith_normal_form
from .weyl import WeylElement, from_word, identity, longest_element, parse_element

__all__ = [
    "bruhat_leq", "interval", "is_boolean_interval", "lower_interval",
    "CartanType", "RootSystem", "build_root_system", "cartan_matrix",
    "Classification", "classify_full", "construct_prescribed", "count_closed_orbits",
    "is_doubly_spherical", "is_horospherical", "is_nearly_toric", "is_nonsingular_horospherical",
    "is_simple_variety", "is_spherical", "is_toric", "is_wonderful",
    "CapExceeded", "InternalInconsistency", "SchubertError", "UserError",
    "IsogenyType", "character_lattice", "kernel_report", "smith_normal_form",
    "WeylElement", "from_word", "identity", "longest_element", "parse_element",
]
