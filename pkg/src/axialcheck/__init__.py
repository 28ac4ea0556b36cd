"""Exact-arithmetic engine for dihedral axial decomposition algebras."""

from .fields import (
    FieldDescriptor,
    FieldElement,
    characteristic,
    parse_scalar,
    render,
    specialize,
)
from .linalg import Matrix, Subspace, Vector, kernel, rref, solve_in_span
from .algebra import (
    AlgebraDef,
    AlgebraMap,
    adjoint_matrix,
    extend_from_generators,
    generated_subalgebra,
    is_homomorphism,
    is_ideal,
    multiply,
    quotient,
)
from .axial import (
    AxisDecomposition,
    DihedralData,
    FusionTable,
    IdentityReport,
    RelationWitness,
    axial_dimension,
    check_dihedral,
    check_fusion,
    identity_suite,
    lambda_coefficient,
    miyamoto,
    p_vector,
    relation_transform,
    split_eigenspace,
)
from .catalog import check_claims, instantiate, list_entries, verify_entry

__version__ = "0.1.0"

__all__ = [
    "AlgebraDef",
    "AlgebraMap",
    "AxisDecomposition",
    "DihedralData",
    "FieldDescriptor",
    "FieldElement",
    "FusionTable",
    "IdentityReport",
    "Matrix",
    "RelationWitness",
    "Subspace",
    "Vector",
    "adjoint_matrix",
    "axial_dimension",
    "characteristic",
    "check_claims",
    "check_dihedral",
    "check_fusion",
    "extend_from_generators",
    "generated_subalgebra",
    "identity_suite",
    "instantiate",
    "is_homomorphism",
    "is_ideal",
    "kernel",
    "lambda_coefficient",
    "list_entries",
    "miyamoto",
    "multiply",
    "p_vector",
    "parse_scalar",
    "quotient",
    "relation_transform",
    "render",
    "rref",
    "solve_in_span",
    "specialize",
    "split_eigenspace",
    "verify_entry",
]
