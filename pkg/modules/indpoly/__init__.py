"""
独立多项式模块
"""

from .polynomial import (
    IndependencePolynomialSolver, independence_polynomial, brute_force_counts,
    poly_add, poly_mul, poly_shift, binomial_poly,
)
from .evaluation import (
    evaluate, log_partition, log_weight_moments, independence_number,
    ratio, ratio_from_poly, adaptive_simpson,
    integral_identity_residual, logpartition_identity_residual,
    horner_with_derivatives,
)
from .transfer import cycle_partition_function, cycle_occupancy

__all__ = [
    "IndependencePolynomialSolver", "independence_polynomial", "brute_force_counts",
    "poly_add", "poly_mul", "poly_shift", "binomial_poly",
    "evaluate", "log_partition", "log_weight_moments", "independence_number",
    "ratio", "ratio_from_poly", "adaptive_simpson",
    "integral_identity_residual", "logpartition_identity_residual",
    "horner_with_derivatives",
    "cycle_partition_function", "cycle_occupancy",
]
