"""Numerical semigroups generated by stepped generalized Fibonacci terms.

Given seeds V_1 = a, V_2 = b and the recurrence V_m = V_{m-1} + V_{m-2},
this package studies S = <V_n, V_{n+d}, V_{n+2d}, ...>: embedding
dimension, Apery sets, Frobenius number and genus, each with a closed
form and a brute-force oracle to check it against.
"""

from .greedy import (
    apery_value,
    apery_value_closed_form,
    base_rank,
    base_sequence,
    fib_target_pattern,
    greedy_repr,
    lucas_target_pattern,
    special_apery_value,
)
from .oracle import (
    MembershipTable,
    OracleInfeasibleError,
    build_membership,
    oracle_apery,
    oracle_frobenius,
    oracle_genus,
    oracle_minimal_generators,
)
from .semigroup import (
    BlockSums,
    NotCoprimeSeedError,
    NotNumericalSemigroupError,
    SemigroupParams,
    SemigroupSummary,
    apery_prefix_sum,
    apery_set,
    embedding_dimension,
    embedding_dimension_closed_form,
    frobenius,
    frobenius_special,
    genus,
    genus_recurrence,
    minimal_generators,
    summary,
    two_generator_invariants,
    validate,
)
from .sequences import FIBONACCI, LUCAS, SequenceSpec, fib, fib_ratio, genfib, genfib_range, lucas

__version__ = "0.1.0"

__all__ = [
    "FIBONACCI",
    "LUCAS",
    "SequenceSpec",
    "fib",
    "fib_ratio",
    "genfib",
    "genfib_range",
    "lucas",
    "greedy_repr",
    "base_sequence",
    "base_rank",
    "apery_value",
    "apery_value_closed_form",
    "fib_target_pattern",
    "lucas_target_pattern",
    "special_apery_value",
    "MembershipTable",
    "OracleInfeasibleError",
    "build_membership",
    "oracle_apery",
    "oracle_frobenius",
    "oracle_genus",
    "oracle_minimal_generators",
    "BlockSums",
    "NotCoprimeSeedError",
    "NotNumericalSemigroupError",
    "SemigroupParams",
    "SemigroupSummary",
    "validate",
    "embedding_dimension",
    "embedding_dimension_closed_form",
    "minimal_generators",
    "apery_set",
    "apery_prefix_sum",
    "frobenius",
    "frobenius_special",
    "genus",
    "genus_recurrence",
    "two_generator_invariants",
    "summary",
]
