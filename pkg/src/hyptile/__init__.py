"""Exact two-size hypercube lattice tilings of R^n and their discrete tori.

The package constructs the lattice tiling of R^n by hypercubes of two
rational side lengths p < q (the n-dimensional generalization of the
classical two-square plane tiling), locates points exactly, enumerates
the tiling's signed-permutation symmetries, builds the induced tilings
of (Z/(p^n+q^n))^n for integer sides, and renders figures.  All core
arithmetic is exact rational; a compiled kernel accelerates the hot
loops with a pure-Python fallback (see hyptile._backend).
"""

from ._backend import BACKEND
from .errors import (
    BudgetExceededError,
    CoverViolationError,
    DimensionMismatchError,
    HyptileError,
    InvalidParamsError,
    RankDeficientError,
    SingularMatrixError,
    TooLargeError,
)
from .ratlin import adjugate, det, hnf, is_integral, solve_exact
from .symmetry import (
    SignedPermutation,
    is_stabilizer,
    lattice_equivalent,
    stabilizer_brute_force,
    stabilizer_closed_form,
)
from .tiling import (
    Basis,
    CanonicalPoint,
    TileKind,
    TileRef,
    TilingParams,
    build_basis,
    build_reduction_basis,
    canonicalize,
    check_unilateral,
    domain_volume,
    in_domain,
    is_lattice_member,
    locate,
    tiles_in_box,
    unilateral_violations,
)
from .torus import (
    TorusParams,
    TorusTiling,
    adjugate_entry_check,
    build_torus_tiling,
    minimal_axis_period,
    packing_report,
    scan_candidate_lattices,
    verify_unilateral_torus,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Basis",
    "BudgetExceededError",
    "CanonicalPoint",
    "CoverViolationError",
    "DimensionMismatchError",
    "HyptileError",
    "InvalidParamsError",
    "RankDeficientError",
    "SignedPermutation",
    "SingularMatrixError",
    "TileKind",
    "TileRef",
    "TilingParams",
    "TooLargeError",
    "TorusParams",
    "TorusTiling",
    "adjugate",
    "adjugate_entry_check",
    "build_basis",
    "build_reduction_basis",
    "build_torus_tiling",
    "canonicalize",
    "check_unilateral",
    "det",
    "domain_volume",
    "hnf",
    "in_domain",
    "is_integral",
    "is_lattice_member",
    "is_stabilizer",
    "lattice_equivalent",
    "locate",
    "minimal_axis_period",
    "packing_report",
    "scan_candidate_lattices",
    "solve_exact",
    "stabilizer_brute_force",
    "stabilizer_closed_form",
    "tiles_in_box",
    "unilateral_violations",
    "verify_unilateral_torus",
]
