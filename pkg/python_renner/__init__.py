# This is the canonical package information.
__author__ = "python-renner developers"
__license__ = "Apache"
__copyright__ = "Copyright (c) 2026, python-renner developers"
__version__ = "0.1.0"

from .cartan import (
    CartanType,
    GeneralizedCartanMatrix,
    Realization,
    classify_type,
    complete_realization,
    point_type,
    q_sat_member,
    validate_gcm,
)
from .coxeter import WeylElement, WeylGroup, orbit_enumerate
from .faces import DominantPoint, Face, FundamentalFace
from .oracle import GeometricLattice, compare_lattices
from .problem import ProblemSpec, create_problem, load_problem, parse_problem
from .renner import CrossSectionEntry, RennerElement, RennerMonoid
from .weights import RootRegion, TruncatedWeightSet, classify_root, generate_weights

__all__ = (
    "CartanType",
    "CrossSectionEntry",
    "DominantPoint",
    "Face",
    "FundamentalFace",
    "GeneralizedCartanMatrix",
    "GeometricLattice",
    "ProblemSpec",
    "Realization",
    "RennerElement",
    "RennerMonoid",
    "RootRegion",
    "TruncatedWeightSet",
    "WeylElement",
    "WeylGroup",
    "classify_root",
    "classify_type",
    "compare_lattices",
    "complete_realization",
    "create_problem",
    "generate_weights",
    "load_problem",
    "orbit_enumerate",
    "parse_problem",
    "point_type",
    "q_sat_member",
    "validate_gcm",
)
