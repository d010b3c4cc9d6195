"""invsub: exact tools for translation-invariant Pauli subalgebras.

Decides invertibility of such subalgebras over prime fields, builds the
commutant projector and the associated Clifford QCA lift, cross-checks
everything on finite tori and patches, and probes the chiral physics
(hopping operators, topological spin, chiral central charge) of the
commuting-term models the construction produces.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .laurent import (
    IdealDescription,
    LaurentMatrix,
    LaurentPoly,
    NotAUnitError,
    PolyParseError,
    RingMismatchError,
    determinant,
    determinantal_profile,
    divides,
    format_poly,
    ideal_is_unit,
    matrix_inverse,
    parse_poly,
)
from .pauli import (
    CommutantProjector,
    InvertibilityCertificate,
    NotInvertibleError,
    ProjectorUnavailableError,
    SpecShapeError,
    SubalgebraSpec,
    build_projector,
    check_invertible,
    commutant_generators,
    commutation_matrix,
    from_antihermitian,
    is_antihermitian,
    symplectic_form,
)
from .qca import (
    CliffordQCA,
    NotSymplecticError,
    block_direct_sum,
    is_symplectic,
    lift_to_qca,
    promote_spec,
    qca_compose,
    qca_inverse,
    shift_qca,
)
from .weyl import (
    BoundedDistance,
    PauliConjugation,
    PhasedPauli,
    dist_bounded,
    unitary_distance,
    unitary_distance_to_identity,
)
from .finite_oracle import (
    FiniteLattice,
    InstantiationError,
    boundary_algebra_finite,
    center_at_boundary_distance,
    check_invertible_finite,
    check_vs,
    instantiate_qca,
    instantiate_spec,
    pairing_matrix,
    pauli_from_column,
    symplectic_complement,
    verify_blend,
)
from .anyon_lab import (
    HamiltonianInstance,
    InfeasibleHopError,
    NoncommutingTermsError,
    NotModularError,
    SpinGeometryError,
    build_hamiltonian,
    gauss_sum_phase,
    hopping_operator,
    leg_string,
    syndrome,
    topological_spin,
)
from .zoo import ZooEntry, example_names, get_example, random_remark_spec
from .specio import SpecFormatError, parse_spec, resolve_spec, spec_to_json

__all__ = [
    "__version__",
    "IdealDescription",
    "LaurentMatrix",
    "LaurentPoly",
    "NotAUnitError",
    "PolyParseError",
    "RingMismatchError",
    "determinant",
    "determinantal_profile",
    "divides",
    "format_poly",
    "ideal_is_unit",
    "matrix_inverse",
    "parse_poly",
    "CommutantProjector",
    "InvertibilityCertificate",
    "NotInvertibleError",
    "ProjectorUnavailableError",
    "SpecShapeError",
    "SubalgebraSpec",
    "build_projector",
    "check_invertible",
    "commutant_generators",
    "commutation_matrix",
    "from_antihermitian",
    "is_antihermitian",
    "symplectic_form",
    "CliffordQCA",
    "NotSymplecticError",
    "block_direct_sum",
    "is_symplectic",
    "lift_to_qca",
    "promote_spec",
    "qca_compose",
    "qca_inverse",
    "shift_qca",
    "BoundedDistance",
    "PauliConjugation",
    "PhasedPauli",
    "dist_bounded",
    "unitary_distance",
    "unitary_distance_to_identity",
    "FiniteLattice",
    "InstantiationError",
    "boundary_algebra_finite",
    "center_at_boundary_distance",
    "check_invertible_finite",
    "check_vs",
    "instantiate_qca",
    "instantiate_spec",
    "pairing_matrix",
    "pauli_from_column",
    "symplectic_complement",
    "verify_blend",
    "HamiltonianInstance",
    "InfeasibleHopError",
    "NoncommutingTermsError",
    "NotModularError",
    "SpinGeometryError",
    "build_hamiltonian",
    "gauss_sum_phase",
    "hopping_operator",
    "leg_string",
    "syndrome",
    "topological_spin",
    "ZooEntry",
    "example_names",
    "get_example",
    "random_remark_spec",
    "SpecFormatError",
    "parse_spec",
    "resolve_spec",
    "spec_to_json",
]
