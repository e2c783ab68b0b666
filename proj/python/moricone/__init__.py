"""Exact Mori and nef cone computations for blowups of products."""

from ._moricone import (
    BudgetExceeded,
    Error,
    InputError,
    classify_construction,
    classify_scenario,
    minus_one_classes,
    relative_cones,
    verify_certificate,
    verify_scenario,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "InputError",
    "classify_construction",
    "classify_scenario",
    "minus_one_classes",
    "relative_cones",
    "verify_certificate",
    "verify_scenario",
]
