"""Exact weight distributions and support designs of lifted linear codes."""

from ._core import (
    BudgetError,
    Code,
    EmptySupportError,
    ZeroDualError,
    assmus_mattson,
    conjecture_rm1,
    design,
    dual,
    field_info,
    hamming,
    hamming_wd,
    lift,
    lifted_hamming_wd,
    lifted_rm1_wd,
    lifted_rm_m2_wd,
    lifted_simplex_wd,
    macwilliams,
    max_strength,
    min_distance,
    prm,
    rank_count,
    rm,
    selector_weights,
    simplex,
    weight_distribution,
)

__all__ = [
    "BudgetError",
    "Code",
    "EmptySupportError",
    "ZeroDualError",
    "assmus_mattson",
    "conjecture_rm1",
    "design",
    "dual",
    "field_info",
    "hamming",
    "hamming_wd",
    "lift",
    "lifted_hamming_wd",
    "lifted_rm1_wd",
    "lifted_rm_m2_wd",
    "lifted_simplex_wd",
    "macwilliams",
    "max_strength",
    "min_distance",
    "prm",
    "rank_count",
    "rm",
    "selector_weights",
    "simplex",
    "weight_distribution",
]
