"""Exception types raised by the solver and its helpers."""


class GenewtonError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(GenewtonError):
    """Operands live in spaces of different dimensions."""


class SingularOperator(GenewtonError):
    """Operator is singular (or indefinite) where an inverse is required."""


class NotContractive(GenewtonError):
    """Deviation from the identity is too large for the inverse bound."""


class NotStronglyMonotone(GenewtonError):
    """Symmetric part of the step operator is not positive definite."""


class MaxIterExceeded(GenewtonError):
    """Iteration cap reached before the requested tolerance."""


class DomainError(GenewtonError):
    """Scalar argument lies outside the admissible interval."""


class InvalidMajorant(GenewtonError):
    """Candidate majorant fails the normalization or shape requirements."""


class PreconditionViolated(GenewtonError):
    """Input violates a precondition of the convergence theory."""


class ConfigError(GenewtonError):
    """Run configuration is malformed or inconsistent."""
