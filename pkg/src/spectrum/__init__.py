from .spectrum import (
    SpectrumResult,
    backward_error,
    check_regularity,
    eigenvalues_rational,
    max_modulus,
    zeros_scalar_oracle,
)

__all__ = [
    "SpectrumResult",
    "backward_error",
    "check_regularity",
    "eigenvalues_rational",
    "max_modulus",
    "zeros_scalar_oracle",
]
