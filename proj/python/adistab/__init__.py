"""ADI time stepping and stability bounds for diffusion equations with mixed derivatives."""

from ._core import (
    BoundResult,
    DomainError,
    InstabilityError,
    Problem,
    Scheme,
    SplitOperator,
    StructuralError,
    amplification,
    bounds_table,
    converge,
    gamma_min,
    global_error,
    lemma2_bruteforce_min,
    lemma2_condition,
    parse_scheme,
    scaled_eigenvalues,
    solve_ak,
    stability_sweep,
    template_matrix,
    theorem1_lower_bound,
    theorem2_lower_bound,
    validate_psd,
)

__all__ = [
    "BoundResult",
    "DomainError",
    "InstabilityError",
    "Problem",
    "Scheme",
    "SplitOperator",
    "StructuralError",
    "amplification",
    "bounds_table",
    "converge",
    "gamma_min",
    "global_error",
    "lemma2_bruteforce_min",
    "lemma2_condition",
    "parse_scheme",
    "scaled_eigenvalues",
    "solve_ak",
    "stability_sweep",
    "template_matrix",
    "theorem1_lower_bound",
    "theorem2_lower_bound",
    "validate_psd",
]
