"""
permspec: exact spectra of multinomial permutation statistics.

Builds regular-representation and Specht-module matrices of descent,
inversion and fixed-point statistics over S_n and certifies their predicted
eigenvalues, multiplicities and minimal polynomials by brute force.
"""

from .characters import Partition, character_sum_dichotomy, character_table, hook_dim, mn_character, partitions
from .errors import (
    CertificationSetupError,
    InvariantViolation,
    PermSpecError,
    RegistryError,
    ResourceLimitError,
    UsageError,
)
from .exact_algebra import Matrix, PolyRegistry, kernel_dim, mat_mul, rank, specialize
from .groupalg import GroupAlgebraElement, convolve, dif_by_substitution, element_of, regular_matrix
from .oracles import errata_ledger, property_checks, run_suite
from .perm import Permutation, compose, cycle_type, enumerate_permutations, inverse
from .specht import leg_form, lex_spectrum, specht_action, verify_thsp
from .spectra import MatrixKind, SpectrumSpec, certify, minimal_polynomial_check, predicted_spectrum
from .stats import StatKind, registry_for, stat_total, stat_value

__all__ = [
    "Partition",
    "character_sum_dichotomy",
    "character_table",
    "hook_dim",
    "mn_character",
    "partitions",
    "CertificationSetupError",
    "InvariantViolation",
    "PermSpecError",
    "RegistryError",
    "ResourceLimitError",
    "UsageError",
    "Matrix",
    "PolyRegistry",
    "kernel_dim",
    "mat_mul",
    "rank",
    "specialize",
    "GroupAlgebraElement",
    "convolve",
    "dif_by_substitution",
    "element_of",
    "regular_matrix",
    "errata_ledger",
    "property_checks",
    "run_suite",
    "Permutation",
    "compose",
    "cycle_type",
    "enumerate_permutations",
    "inverse",
    "leg_form",
    "lex_spectrum",
    "specht_action",
    "verify_thsp",
    "MatrixKind",
    "SpectrumSpec",
    "certify",
    "minimal_polynomial_check",
    "predicted_spectrum",
    "StatKind",
    "registry_for",
    "stat_total",
    "stat_value",
]
