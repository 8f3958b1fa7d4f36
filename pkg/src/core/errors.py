"""
Exception hierarchy shared by every package.

The CLI maps the four families below to exit codes (see EXIT_CODES in
src/config.py).
"""


class RatBoundError(Exception):
    """Base class of all library errors."""


class ParseError(RatBoundError):
    """Instance data could not be read (bad JSON, missing keys, bad shapes)."""


# =============================================================================
# VALIDATION
# =============================================================================


class ValidationError(RatBoundError):
    """Instance data was readable but violates an instance invariant."""


class NonMonicLeading(ValidationError):
    """Leading coefficient of the polynomial part is not the identity."""


class DegreeZero(ValidationError):
    """Polynomial part has degree zero."""


class DimensionMismatch(ValidationError):
    """A coefficient matrix does not have the instance size."""


class NonFiniteEntry(ValidationError):
    """A NaN or infinite number was supplied."""


class ZeroTopOrderCoefficient(ValidationError):
    """Canonical mode: the highest power of a pole has a zero coefficient."""


# =============================================================================
# METHOD PRECONDITIONS
# =============================================================================


class InapplicableMethod(RatBoundError):
    """A bound method's preconditions do not hold for this input."""


class DegreeTooSmall(InapplicableMethod):
    pass


class BadOpts(InapplicableMethod):
    pass


class NotLinear(InapplicableMethod):
    """Linear-case bounds need a polynomial part of degree one."""


# =============================================================================
# NUMERICS
# =============================================================================


class NonRegularSuspected(RatBoundError):
    """det R(lam) vanished at every regularity probe point."""


class NumericalFailure(RatBoundError):
    """Base class for failures of an iterative or guarded computation."""


class NoConvergence(NumericalFailure):
    pass


class BracketFailure(NumericalFailure):
    """No sign change of q(x) was found below the bracket limit."""


class DimensionOverflow(NumericalFailure):
    """The block matrix would exceed the configured dimension cap."""


class EvaluationAtPole(NumericalFailure):
    pass
