from .companion import (
    BlockInfo,
    CompanionMatrix,
    build,
    companion_dimension,
    companion_to_dict,
    companion_to_matrix_market,
    containment_check,
    lift_eigenvector,
)

__all__ = [
    "BlockInfo",
    "CompanionMatrix",
    "build",
    "companion_dimension",
    "companion_to_dict",
    "companion_to_matrix_market",
    "containment_check",
    "lift_eigenvector",
]
