"""Exception types shared across the package."""


class AsscError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(AsscError, ValueError):
    """Input violates a documented precondition (shapes, finiteness, ranges)."""


class PreconditionViolation(AsscError):
    """A caller-verified precondition does not actually hold for the data."""


class SolverFailure(AsscError):
    """A numerical solver could not produce a trustworthy answer."""


class NoRepresentationError(AsscError):
    """The requested self-representation problem is infeasible."""


class GenerationFailure(AsscError):
    """Randomized data generation exhausted its rejection budget."""


class InternalError(AsscError):
    """Inconsistent internal state; indicates a bug rather than bad input."""
