"""Exception hierarchy shared by all coapprox modules.

The CLI maps these onto process exit codes: validation problems exit
with 2, capacity guards with 3, violated preconditions with 4.
"""


class CoapproxError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CoapproxError):
    """Malformed or inconsistent input data."""

    exit_code = 2


class DimensionError(ValidationError):
    """Vector/matrix sizes do not fit together (or are empty)."""


class RankDeficientError(ValidationError):
    """Claimed basis vectors are linearly dependent."""


class CapacityError(CoapproxError):
    """Input exceeds a documented size guard of an exact kernel."""

    exit_code = 3


class PreconditionError(CoapproxError):
    """Operation called outside its stated domain."""

    exit_code = 4


class ZeroSubspaceError(PreconditionError):
    """Every coordinate row of the basis matrix is zero."""


class EmptyZeroSetError(PreconditionError):
    """Threshold queries require a basis with a non-empty zero set."""


class NoCoapproximationError(PreconditionError):
    """A projection was requested for a target with no best coapproximation."""


class InternalInconsistencyError(CoapproxError):
    """An internal invariant failed; indicates a bug, not bad input."""
