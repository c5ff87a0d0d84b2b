"""Exact construction and classification of the finite SU(3) subgroup
series C(n,a,b) and D(n,a,b;d,r,s)."""

from .abelian import (
    AbelianStructure,
    TwoGenDecomposition,
    abelian_structure,
    intersection_check,
    two_gen_decomposition,
)
from .delta6 import (
    Delta6Image,
    Delta6Presentation,
    build_irrep,
    delta6_image_obstruction,
    image_structure,
    presentation_relations_hold,
)
from .engine import (
    GroupFingerprint,
    GroupTable,
    close,
    default_order_cap,
    generator_homomorphism,
    invariant_factors_from_orders,
)
from .errors import CapExceeded, NotClosed, NotDiagonal, SubNotContained, UnstableDedup
from .monomial import (
    IDENTITY,
    MonomialElement,
    cycle_generator,
    flip_generator,
    monomial,
    phase_generator,
    scalar_omega,
)
from .oracle import match_one_to_one, numeric_close, numeric_element_order
from .report import ClassificationReport, analyze_c, analyze_d
from .series_c import (
    CStructure,
    build_c_group,
    classify_c_group,
    delta3_irrep_correspondence,
    diagonal_generators,
    has_central_z3_splitting,
    is_tn,
    semidirect_witness,
    tn_prime_condition,
)
from .series_d import (
    DStructure,
    DerivedGenerators,
    build_d_group,
    canonical_reflection,
    classify_d_group,
    conjugated_d_group,
    derived_generators,
    diagonal_generating_set,
    diagonal_subgroup_a,
    s3_action_table,
    split_check,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianStructure",
    "CStructure",
    "CapExceeded",
    "ClassificationReport",
    "DStructure",
    "Delta6Image",
    "Delta6Presentation",
    "DerivedGenerators",
    "GroupFingerprint",
    "GroupTable",
    "IDENTITY",
    "MonomialElement",
    "NotClosed",
    "NotDiagonal",
    "SubNotContained",
    "TwoGenDecomposition",
    "UnstableDedup",
    "abelian_structure",
    "analyze_c",
    "analyze_d",
    "build_c_group",
    "build_d_group",
    "build_irrep",
    "canonical_reflection",
    "classify_c_group",
    "classify_d_group",
    "close",
    "conjugated_d_group",
    "cycle_generator",
    "default_order_cap",
    "delta3_irrep_correspondence",
    "delta6_image_obstruction",
    "derived_generators",
    "diagonal_generating_set",
    "diagonal_generators",
    "diagonal_subgroup_a",
    "flip_generator",
    "generator_homomorphism",
    "has_central_z3_splitting",
    "image_structure",
    "intersection_check",
    "invariant_factors_from_orders",
    "is_tn",
    "match_one_to_one",
    "monomial",
    "numeric_close",
    "numeric_element_order",
    "phase_generator",
    "presentation_relations_hold",
    "s3_action_table",
    "scalar_omega",
    "semidirect_witness",
    "split_check",
    "tn_prime_condition",
    "two_gen_decomposition",
]
