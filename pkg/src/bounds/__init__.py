from .matrix_bounds import (
    SUMMARY_METHODS,
    RealRationalFunction,
    associate_q,
    linear_matrix_bound,
    q_root_bound,
    summary_bounds,
)
from .scalar_bounds import (
    POLY_METHODS,
    RATIONAL_METHODS,
    BoundValue,
    block_quantities,
    linear_case_bound,
    poly_bound,
    positive_root,
    rational_zero_bound,
)

__all__ = [
    "POLY_METHODS",
    "RATIONAL_METHODS",
    "SUMMARY_METHODS",
    "BoundValue",
    "RealRationalFunction",
    "associate_q",
    "block_quantities",
    "linear_case_bound",
    "linear_matrix_bound",
    "poly_bound",
    "positive_root",
    "q_root_bound",
    "rational_zero_bound",
    "summary_bounds",
]
