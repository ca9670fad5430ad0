"""
Arrangements - hyperplanes, intersection lattices and characteristic polynomials
"""

from hyperfree.arrangements.charpoly import (
    CharpolyMethod,
    betti,
    chamber_counts,
    charpoly,
    count_complement_mod,
    poincare,
    safety_bound,
)
from hyperfree.arrangements.generators import boolean, braid, generic_central, lines
from hyperfree.arrangements.lattice import Flat, IntersectionLattice, flat_of, intersection_lattice
from hyperfree.arrangements.models import (
    Arrangement,
    Hyperplane,
    Multiplicity,
    defining_polynomial,
)
from hyperfree.arrangements.operations import (
    Restriction,
    RestrictionChart,
    cone,
    deletion,
    essentialize,
    localization,
    restrict,
    ziegler,
)

__all__ = [
    "Arrangement",
    "CharpolyMethod",
    "Flat",
    "Hyperplane",
    "IntersectionLattice",
    "Multiplicity",
    "Restriction",
    "RestrictionChart",
    "betti",
    "boolean",
    "braid",
    "chamber_counts",
    "charpoly",
    "cone",
    "count_complement_mod",
    "defining_polynomial",
    "deletion",
    "essentialize",
    "flat_of",
    "generic_central",
    "intersection_lattice",
    "lines",
    "localization",
    "poincare",
    "restrict",
    "safety_bound",
    "ziegler",
]
