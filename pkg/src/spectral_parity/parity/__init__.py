"""Strong-parity-factor decisions: subset criterion and definitional oracle."""

from spectral_parity.parity.criterion import (
    criterion_check,
    criterion_sample,
    max_violation_margin,
)
from spectral_parity.parity.oracle import (
    OracleStrategy,
    feasible_demands,
    find_parity_factor,
    oracle_check,
)
from spectral_parity.parity.verdict import (
    FactorWitness,
    SpfVerdict,
    ViolationDetail,
    check_factor,
    validate_factor,
    violation_margin,
)

__all__ = [
    "FactorWitness",
    "OracleStrategy",
    "SpfVerdict",
    "ViolationDetail",
    "check_factor",
    "criterion_check",
    "criterion_sample",
    "feasible_demands",
    "find_parity_factor",
    "max_violation_margin",
    "oracle_check",
    "validate_factor",
    "violation_margin",
]
