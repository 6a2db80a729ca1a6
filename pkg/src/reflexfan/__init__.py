"""Exact-arithmetic fans over reflexive lattice polytopes.

Construction, validation, and exhaustive enumeration of complete simplicial
fans whose rays are the rays over all nonzero lattice points of a reflexive
polytope; wall-crossing flips between them; and combinatorial smoothness
certificates for the associated generic anticanonical hypersurface families.
"""

from .circuitflip import FlipMove, OrientedCircuit, circuit_fans, circuit_of, find_flips, flip
from .exactlin import NonUnimodularBasisError, det, dual_basis, kernel_basis
from .fan import (
    Cone,
    Fan,
    ValidationReport,
    Violation,
    cone_contains,
    derive_polytope,
    face_fan,
    is_complete,
    is_projective,
    is_unimodular,
    maximal_fan_points,
    skeleton,
    validate_maximal_fan,
)
from .polytope import (
    Face,
    Facet,
    LatticePolytope,
    NonLatticeDualError,
    boundary_multiplicity,
    dual,
    hull,
    is_reflexive,
    lattice_points,
    smallest_face_containing,
)
from .smoothcert import (
    GOOD,
    LINEAR_TERM,
    MISSED_BY_GENERIC,
    UNDECIDED,
    ChartExponents,
    GoodnessResult,
    SmoothnessCertificate,
    chart_exponents,
    has_good_maximal_cones,
    is_good_cone,
    remark_witness,
    smoothness_certificate,
)
from .triangulate import (
    MaximalConeCandidate,
    SearchBudgetExceeded,
    SubdivisionError,
    enumerate_maximal_cones,
    enumerate_maximal_fans,
    mpcp,
    refine_to,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "ChartExponents",
    "Face",
    "Facet",
    "Fan",
    "FlipMove",
    "GOOD",
    "GoodnessResult",
    "LINEAR_TERM",
    "LatticePolytope",
    "MISSED_BY_GENERIC",
    "MaximalConeCandidate",
    "NonLatticeDualError",
    "NonUnimodularBasisError",
    "OrientedCircuit",
    "SearchBudgetExceeded",
    "SmoothnessCertificate",
    "SubdivisionError",
    "UNDECIDED",
    "ValidationReport",
    "Violation",
    "boundary_multiplicity",
    "chart_exponents",
    "circuit_fans",
    "circuit_of",
    "cone_contains",
    "derive_polytope",
    "det",
    "dual",
    "dual_basis",
    "enumerate_maximal_cones",
    "enumerate_maximal_fans",
    "face_fan",
    "find_flips",
    "flip",
    "has_good_maximal_cones",
    "hull",
    "is_complete",
    "is_good_cone",
    "is_projective",
    "is_reflexive",
    "is_unimodular",
    "kernel_basis",
    "lattice_points",
    "maximal_fan_points",
    "mpcp",
    "refine_to",
    "remark_witness",
    "skeleton",
    "smallest_face_containing",
    "smoothness_certificate",
    "validate_maximal_fan",
]
