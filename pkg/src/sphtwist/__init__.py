"""Braid group actions by spherical twists on an A_n-chain, computed as
complexes of graded projectives over the chain's endomorphism algebra,
with exact K-theory, lattice and elliptic-curve shadows."""

from .algebra import AlgebraElement, ChainParams, ZigzagAlgebra
from .complexes import (
    ChainMap,
    GradedVectorComplex,
    ProjComplex,
    cone,
    hom_from_projective,
    hom_to_projective,
    homology_table,
    is_isomorphic,
    is_minimal,
    minimize,
)
from .ktheory import (
    DefinitenessReport,
    IntersectionLattice,
    an_minus2_lattice,
    build_tdiagram,
    burau_matrix,
    chi_q,
    definiteness,
    elliptic_generator,
    elliptic_word,
    euler_class,
    pl_product,
    pl_reflection,
    strange_duality_rank_check,
)
from .laurent import LaurentPoly
from .twists import (
    ComparisonReport,
    RelationReport,
    apply_word,
    compare_words,
    hom_matrix,
    parse_braid_word,
    twist,
    untwist,
    verify_relations,
)

__all__ = [
    "AlgebraElement",
    "ChainMap",
    "ChainParams",
    "ComparisonReport",
    "DefinitenessReport",
    "GradedVectorComplex",
    "IntersectionLattice",
    "LaurentPoly",
    "ProjComplex",
    "RelationReport",
    "ZigzagAlgebra",
    "an_minus2_lattice",
    "apply_word",
    "build_tdiagram",
    "burau_matrix",
    "chi_q",
    "compare_words",
    "cone",
    "definiteness",
    "elliptic_generator",
    "elliptic_word",
    "euler_class",
    "hom_from_projective",
    "hom_matrix",
    "hom_to_projective",
    "homology_table",
    "is_isomorphic",
    "is_minimal",
    "minimize",
    "parse_braid_word",
    "pl_product",
    "pl_reflection",
    "strange_duality_rank_check",
    "twist",
    "untwist",
    "verify_relations",
]

__version__ = "0.1.0"
