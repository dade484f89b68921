"""Exact-arithmetic construction and verification of quasi-recursive MDS
matrices over Galois rings, via skew polynomial rings GR(p^s, p^(s*m))[X; sigma].
"""

from .errors import SkewMdsError
from .galois_ring import (
    Embedding,
    GaloisRing,
    ResidueField,
    RingElement,
    default_modulus,
    make_ring,
)
from .skew import (
    SkewPoly,
    build_w_poly,
    right_roots_of_unity,
    sigma_norm,
    sigma_norm_table,
    splitting_degree,
)
from .matrices import (
    GRMatrix,
    VerificationReport,
    chain_rows,
    check_quasi_involutory,
    companion,
    is_mds,
    twisted_chain,
)
from .vandermonde import (
    classical_vdm_det,
    gen_vandermonde,
    indexed_vdm_det,
    linearized_det,
    mds_via_vandermonde,
    support_exponents,
)
from .constructions import (
    ConstructionResult,
    ConstructionSpec,
    build,
    consecutive_powers,
    distinct_norm_extension,
    frobenius_orbit,
    gap_family,
    guard_constant_term,
    perturb_coefficients,
    perturb_roots,
)
from .oracle import (
    CodeInstance,
    min_distance,
    oracle_report,
    support_basis,
    weight_criterion_full,
    weight_criterion_support,
)
from . import jsonio

__version__ = "1.0.0"

__all__ = [
    "Embedding",
    "GaloisRing",
    "ResidueField",
    "RingElement",
    "SkewMdsError",
    "SkewPoly",
    "GRMatrix",
    "VerificationReport",
    "CodeInstance",
    "ConstructionResult",
    "ConstructionSpec",
    "build",
    "build_w_poly",
    "chain_rows",
    "check_quasi_involutory",
    "classical_vdm_det",
    "companion",
    "consecutive_powers",
    "default_modulus",
    "distinct_norm_extension",
    "frobenius_orbit",
    "gap_family",
    "gen_vandermonde",
    "guard_constant_term",
    "indexed_vdm_det",
    "is_mds",
    "jsonio",
    "linearized_det",
    "make_ring",
    "mds_via_vandermonde",
    "min_distance",
    "oracle_report",
    "perturb_coefficients",
    "perturb_roots",
    "right_roots_of_unity",
    "sigma_norm",
    "sigma_norm_table",
    "splitting_degree",
    "support_basis",
    "support_exponents",
    "twisted_chain",
    "weight_criterion_full",
    "weight_criterion_support",
]
