"""
Error hierarchy for momentcone.

Every error is a ``ValueError`` so callers that only guard against bad input
keep working, and carries a stable ``code`` used in the CLI's error JSON and
the API's error responses.
"""

from typing import Any, Dict, Optional, Sequence


class MomentConeError(ValueError):
    """Base class for all domain errors."""

    code = "momentcone_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form of the error."""
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class InvalidArgumentError(MomentConeError):
    """An argument is outside the documented range."""

    code = "invalid_argument"


class SystemDefinitionError(MomentConeError):
    """A function system cannot be built from the given description."""

    code = "invalid_system"


class ChartMismatchError(MomentConeError):
    """A point does not live in the chart or dimension of the system."""

    code = "chart_mismatch"


class DomainError(MomentConeError):
    """A point lies outside the declared domain of a custom system."""

    code = "outside_domain"


class NotDifferentiableError(MomentConeError):
    """Derivatives were requested from a system without derivative handles."""

    code = "not_differentiable"


class InvalidMeasureError(MomentConeError):
    """An atomic measure violates its sign or shape constraints."""

    code = "invalid_measure"


class GroundSetError(MomentConeError):
    """A ground set is empty, mixed, too small to span, or too large."""

    code = "invalid_ground_set"


class NotAMemberError(MomentConeError):
    """The sequence is not in the cone spanned by the ground set."""

    code = "not_a_member"

    def __init__(self, message: str, separator: Optional[Sequence[Any]] = None):
        details = {"separator": [str(v) for v in separator]} if separator else None
        super().__init__(message, details)
        self.separator = tuple(separator) if separator else None


class UnpointedConeError(MomentConeError):
    """No function of lin A is positive on the whole ground set."""

    code = "unpointed_cone"


class BudgetExceededError(MomentConeError):
    """A table cell is larger than the configured budget."""

    code = "budget_exceeded"


class ScalarParseError(MomentConeError):
    """A string is not an exact element of Q(sqrt 2)."""

    code = "invalid_scalar"


class CertificateError(MomentConeError):
    """An exact self-check of a computed certificate failed."""

    code = "certificate_failed"
