"""Unextendible entangled bases with fixed Schmidt number (UEBk).

Constructions for arbitrary bipartite dimensions, verification of
orthonormality / Schmidt rank / unextendibility, and the complementary
mixed state whose range stays below Schmidt number k.
"""

from ._core import (
    DEFAULT_ORTH_TOL,
    DEFAULT_RANK_TOL,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    BipartiteVector,
    ComplementSupport,
    DensityMatrix,
    ExpectedCounts,
    Family,
    FamilyParams,
    Prop2Convention,
    RangeSchmidtBound,
    SubspaceBasis,
    UebkFamily,
    VerificationReport,
    VerifyConfig,
    allowed_m_values,
    complement_basis,
    complement_support,
    construct,
    construct_eq8,
    construct_prop1,
    construct_prop2,
    construct_prop3,
    construct_prop4,
    construct_prop5,
    construct_prop6,
    density_to_json,
    enumerate_families,
    expected_counts,
    family_from_json,
    family_to_json,
    generic_max_schmidt_rank,
    load_family,
    load_report,
    matricize,
    member_count_formula,
    mix_seed,
    phase,
    random_unit_in_span,
    range_schmidt_bound,
    report_from_json,
    report_to_json,
    rho_perp,
    save_density,
    save_family,
    save_report,
    schmidt_rank,
    singular_values,
    structural_rank_bound,
    vectorize,
    verify_family,
)

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_ORTH_TOL",
    "DEFAULT_RANK_TOL",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "BipartiteVector",
    "ComplementSupport",
    "DensityMatrix",
    "ExpectedCounts",
    "Family",
    "FamilyParams",
    "Prop2Convention",
    "RangeSchmidtBound",
    "SubspaceBasis",
    "UebkFamily",
    "VerificationReport",
    "VerifyConfig",
    "allowed_m_values",
    "complement_basis",
    "complement_support",
    "construct",
    "construct_eq8",
    "construct_prop1",
    "construct_prop2",
    "construct_prop3",
    "construct_prop4",
    "construct_prop5",
    "construct_prop6",
    "density_to_json",
    "enumerate_families",
    "expected_counts",
    "family_from_json",
    "family_to_json",
    "generic_max_schmidt_rank",
    "load_family",
    "load_report",
    "matricize",
    "member_count_formula",
    "mix_seed",
    "phase",
    "random_unit_in_span",
    "range_schmidt_bound",
    "report_from_json",
    "report_to_json",
    "rho_perp",
    "save_density",
    "save_family",
    "save_report",
    "schmidt_rank",
    "singular_values",
    "structural_rank_bound",
    "vectorize",
    "verify_family",
]
