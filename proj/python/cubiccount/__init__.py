"""Exact solution counts of diagonal cubic equations over finite fields.

Thin python surface over the C++ core: field arithmetic, the (c, d)
solver, closed-form counts with their brute-force oracles, and the
character-sum checks. Elements are plain lists of coefficients,
constant term first.
"""

from ._cubiccount import (
    BudgetExceededError,
    ConsistencyError,
    DivisionByZeroError,
    FieldConfig,
    UnsupportedFieldError,
    brute_A,
    brute_B,
    brute_M,
    brute_N,
    count_A,
    count_B,
    count_M,
    count_N,
    enumerate_N_solutions,
    find_irreducible,
    gauss_G,
    gauss_S,
    hasse_davenport_residual,
    is_prime,
    jacobi_chichi,
    run_verify,
    series_A,
    series_B,
    solve_c,
    solve_cd,
    weighted_cube_identity,
)

__all__ = [
    "BudgetExceededError",
    "ConsistencyError",
    "DivisionByZeroError",
    "FieldConfig",
    "UnsupportedFieldError",
    "brute_A",
    "brute_B",
    "brute_M",
    "brute_N",
    "count_A",
    "count_B",
    "count_M",
    "count_N",
    "enumerate_N_solutions",
    "find_irreducible",
    "gauss_G",
    "gauss_S",
    "hasse_davenport_residual",
    "is_prime",
    "jacobi_chichi",
    "run_verify",
    "series_A",
    "series_B",
    "solve_c",
    "solve_cd",
    "weighted_cube_identity",
]
