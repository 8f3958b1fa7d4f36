from .kernels import (
    NORMS,
    eigenvalues,
    jordan_like_block,
    norm,
    numerical_radius,
    numerical_radius_upper,
    sigma_min,
    spectral_radius,
    w_bound_block2,
    w_jordan_like,
)

__all__ = [
    "NORMS",
    "eigenvalues",
    "jordan_like_block",
    "norm",
    "numerical_radius",
    "numerical_radius_upper",
    "sigma_min",
    "spectral_radius",
    "w_bound_block2",
    "w_jordan_like",
]
