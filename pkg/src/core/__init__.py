from .errors import (
    BadOpts,
    BracketFailure,
    DegreeTooSmall,
    DegreeZero,
    DimensionMismatch,
    DimensionOverflow,
    EvaluationAtPole,
    InapplicableMethod,
    NoConvergence,
    NonFiniteEntry,
    NonMonicLeading,
    NonRegularSuspected,
    NotLinear,
    NumericalFailure,
    ParseError,
    RatBoundError,
    ValidationError,
    ZeroTopOrderCoefficient,
)
from .io import dump_instance, instance_to_dict, load_instance, parse_instance
from .rational import (
    CANONICAL,
    MODES,
    PER_TERM,
    MatrixPolynomial,
    MonicPolynomial,
    PoleTerm,
    RationalMatrix,
    ScalarRationalFunction,
    evaluate,
    normalize,
    polynomial_companion,
    rational_matrix,
    scalar_function,
    to_numerator_polynomial,
    validate,
)

__all__ = [
    "BadOpts",
    "BracketFailure",
    "CANONICAL",
    "DegreeTooSmall",
    "DegreeZero",
    "DimensionMismatch",
    "DimensionOverflow",
    "EvaluationAtPole",
    "InapplicableMethod",
    "MODES",
    "MatrixPolynomial",
    "MonicPolynomial",
    "NoConvergence",
    "NonFiniteEntry",
    "NonMonicLeading",
    "NonRegularSuspected",
    "NotLinear",
    "NumericalFailure",
    "PER_TERM",
    "ParseError",
    "PoleTerm",
    "RatBoundError",
    "RationalMatrix",
    "ScalarRationalFunction",
    "ValidationError",
    "ZeroTopOrderCoefficient",
    "dump_instance",
    "evaluate",
    "instance_to_dict",
    "load_instance",
    "normalize",
    "parse_instance",
    "polynomial_companion",
    "rational_matrix",
    "scalar_function",
    "to_numerator_polynomial",
    "validate",
]
