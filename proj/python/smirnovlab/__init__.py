"""Modified Smirnov operator and certified Bernstein-type inequality checks.

Polynomials are lists of complex coefficients in ascending powers.
"""

from ._smirnovlab import (
    certify_on_circle,
    certify_on_grid,
    check_pointwise,
    composite_transform,
    conjugate_reciprocal,
    derivative,
    dilate,
    evaluate,
    find_roots,
    generate,
    inequality_ids,
    is_exceptional_value,
    limit_expression,
    max_modulus_on_circle,
    smirnov_modified,
    smirnov_op,
    violation_search,
)

__all__ = [
    "certify_on_circle",
    "certify_on_grid",
    "check_pointwise",
    "composite_transform",
    "conjugate_reciprocal",
    "derivative",
    "dilate",
    "evaluate",
    "find_roots",
    "generate",
    "inequality_ids",
    "is_exceptional_value",
    "limit_expression",
    "max_modulus_on_circle",
    "smirnov_modified",
    "smirnov_op",
    "violation_search",
]
