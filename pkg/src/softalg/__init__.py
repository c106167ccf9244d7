"""Soft sets as an information algebra: combination, projection, order, suprema
and the compact-algebra machinery (finite elements, way-below, density)."""

from .compact import (
    DecompositionStream,
    compactness_witness,
    decomposition_prefix_sup,
    density_decomposition,
    is_finite_element,
    way_below_bruteforce,
)
from .document import emit_softset_doc, parse_softset_doc
from .lattice import bounds, is_upper_bound, meet_fixed_domain, sup
from .setrep import Cof, Fin, Kind, Mode, SubsetRep, UniverseCtx, make
from .softset import (
    SoftSet,
    absolute,
    canonical_softset,
    combine,
    eq,
    label,
    leq,
    make_softset,
    null,
    project,
)

__all__ = [
    "Cof", "DecompositionStream", "Fin", "Kind", "Mode", "SoftSet", "SubsetRep", "UniverseCtx",
    "absolute", "bounds", "canonical_softset", "combine", "compactness_witness",
    "decomposition_prefix_sup", "density_decomposition", "emit_softset_doc", "eq",
    "is_finite_element", "is_upper_bound", "label", "leq", "make", "make_softset",
    "meet_fixed_domain", "null", "parse_softset_doc", "project", "sup", "way_below_bruteforce",
]
