"""Exact simplicial homology and the homology-level duality checks."""

from .chains import (
    DEFAULT_MAX_SIMPLICES,
    ChainComplex,
    ChainMap,
    chain_complex,
    induced_chain_map,
    mapping_cone,
)
from .fields import GF2, QQ, PrimeField, Rationals, parse_coeff
from .groups import HomologyGroup, HomologyResult, chain_homology, homology
from .maps import HomologyBasis, Matrix, homology_basis, homology_map_matrix
from .snf import determinant, invariant_factors, is_smith_form, smith_certificate, smith_normal_form
from .sparse import (
    SmithCertificate,
    SparseMatrix,
    field_rank,
    integer_reduction,
    sparse_smith_certificate,
    verify_smith_certificate,
)
from .verify import (
    FiberReport,
    check_fiber_hypothesis,
    check_functorial_dowker,
    cone_homology,
    is_quasi_isomorphism,
    psi_star,
)

__all__ = [
    "DEFAULT_MAX_SIMPLICES",
    "ChainComplex",
    "ChainMap",
    "chain_complex",
    "induced_chain_map",
    "mapping_cone",
    "GF2",
    "QQ",
    "PrimeField",
    "Rationals",
    "parse_coeff",
    "HomologyGroup",
    "HomologyResult",
    "chain_homology",
    "homology",
    "HomologyBasis",
    "Matrix",
    "homology_basis",
    "homology_map_matrix",
    "determinant",
    "invariant_factors",
    "is_smith_form",
    "smith_certificate",
    "smith_normal_form",
    "SparseMatrix",
    "field_rank",
    "integer_reduction",
    "SmithCertificate",
    "sparse_smith_certificate",
    "verify_smith_certificate",
    "FiberReport",
    "check_fiber_hypothesis",
    "check_functorial_dowker",
    "cone_homology",
    "is_quasi_isomorphism",
    "psi_star",
]
