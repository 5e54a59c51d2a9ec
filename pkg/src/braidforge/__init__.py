"""Exact construction and certification of families of irreducible
representations of the three-string braid group B3.

Representations of the modular group C2 * C3 are encoded as representations
of a five-vertex bipartite quiver; non-isomorphic small irreducibles are glued
along Ext cocycles, and every result is re-certified with exact arithmetic
over Q(w), w a primitive cube root of unity.
"""

__version__ = "0.1.0"

from .exact import OMEGA, Cyclotomic, Matrix, mat_inverse, mat_rank, kernel_basis
from .quiver import (
    LabeledQuiver,
    Quiver,
    euler_form,
    family_dimension,
    is_strongly_connected,
    local_quiver,
    onedim_is_simple,
    sigma_quiver,
)
from .gamma0 import (
    Gamma0Rep,
    QRep,
    assemble_base_change,
    fingerprint,
    hom_ext,
    is_irreducible,
    make_S,
    make_T,
    to_gamma0,
    westbury_quiver,
)
from .braid import B3Rep, admissible_bound, b3_irreducible, central_character, check_braid, k_default, lift_to_b3
from .family import (
    Certificate,
    FamilySpec,
    build_family_member,
    certify_member,
    pairwise_distinct,
    realize,
    summand_list,
)

__all__ = [
    "__version__",
    "OMEGA",
    "Cyclotomic",
    "Matrix",
    "mat_inverse",
    "mat_rank",
    "kernel_basis",
    "LabeledQuiver",
    "Quiver",
    "euler_form",
    "family_dimension",
    "is_strongly_connected",
    "local_quiver",
    "onedim_is_simple",
    "sigma_quiver",
    "Gamma0Rep",
    "QRep",
    "assemble_base_change",
    "fingerprint",
    "hom_ext",
    "is_irreducible",
    "make_S",
    "make_T",
    "to_gamma0",
    "westbury_quiver",
    "B3Rep",
    "admissible_bound",
    "b3_irreducible",
    "central_character",
    "check_braid",
    "k_default",
    "lift_to_b3",
    "Certificate",
    "FamilySpec",
    "build_family_member",
    "certify_member",
    "pairwise_distinct",
    "realize",
    "summand_list",
]
