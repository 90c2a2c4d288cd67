"""Exact calculator for Nielsen coincidence invariants."""

from .classified import (
    HopfDegreeReport,
    ProjectiveBundleInstance,
    exceptional_sphere_pair,
    hopf_degrees,
    projective_bundle_invariants,
    sphere_root_invariants,
)
from .grassmann import (
    GrassmannInstance,
    PreconditionError,
    StableObstruction,
    euler_char_grassmannian,
    grassmann_dims,
    grassmann_selfcoincidence,
    top_obstruction,
)
from .invariants import Bounded, InvariantReport, Known, Unknown
from .lattice import (
    IntMatrix,
    LatticeError,
    SmithDecomposition,
    det,
    gcd_entries,
    nonzero_minor_exists,
    rank,
    smith_normal_form,
)
from .quotients import INF, CokernelStructure, ExtendedNat, Finite, cardinality, cokernel, reidemeister_count
from .textio import parse_matrix, report_from_dict, report_to_dict, serialize_matrix
from .torus import TorusInstance, circle_invariants, cup_product_nonzero_torus, torus_invariants
from .validation import ValidationResult, validate_chain

__version__ = "0.1.0"
