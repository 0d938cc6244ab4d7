"""Typed errors with machine-readable codes used across the toolchain.

The CLI maps codes to exit statuses: infeasible problems exit 2, resource
caps exit 3, verification failures exit 4, usage errors exit 1.
"""


class LoqsgError(Exception):
    """Base class; `code` is the machine-readable error identifier."""

    code = "ERROR"

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = detail


class InfeasibleBoundError(LoqsgError):
    """A NOON request that violates the n_i <= m+1 generation bound."""

    code = "INFEASIBLE_BOUND"


class EmptyIntersectionError(LoqsgError):
    """The polynomial system is inconsistent: no generator matrix exists."""

    code = "EMPTY_INTERSECTION"


class PositiveDimensionalError(LoqsgError):
    """The solution set is not finite; carries the offending variable."""

    code = "NOT_ZERO_DIMENSIONAL"


class ResourceBudgetError(LoqsgError):
    """A Groebner size/pair/time budget was exceeded before completion."""

    code = "RESOURCE_CAP"


class NotAContractionError(LoqsgError):
    """Dilation input has largest singular value above 1 + tol."""

    code = "NOT_CONTRACTION"


class VerificationError(LoqsgError):
    """Independent re-simulation of a reported solution disagreed."""

    code = "VERIFICATION_FAILURE"
