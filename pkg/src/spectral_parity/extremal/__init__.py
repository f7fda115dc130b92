"""Extremal families (G*, G1, G2, G3) and their closed-form polynomials."""

from spectral_parity.extremal.families import (
    Family,
    FamilyInstance,
    FamilyParams,
    PartitionSpec,
    below_theorem_range,
    build_case1,
    build_case3,
    build_extremal,
    build_general,
    family_instance,
    general_blocks,
    part_count,
    three_blocks,
)
from spectral_parity.extremal.polynomials import (
    b2_matrix,
    b3_matrix,
    bstar_matrix,
    comparison_point,
    eval_g,
    eval_h,
    eval_phiB3_prime,
    phi_B2,
    phi_B3,
    phi_Bstar,
)

__all__ = [
    "Family",
    "FamilyInstance",
    "FamilyParams",
    "PartitionSpec",
    "b2_matrix",
    "b3_matrix",
    "below_theorem_range",
    "bstar_matrix",
    "build_case1",
    "build_case3",
    "build_extremal",
    "build_general",
    "comparison_point",
    "eval_g",
    "eval_h",
    "eval_phiB3_prime",
    "family_instance",
    "general_blocks",
    "part_count",
    "phi_B2",
    "phi_B3",
    "phi_Bstar",
    "three_blocks",
]
