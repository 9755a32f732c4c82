"""Exception types shared across the package."""


class ElkoError(Exception):
    """Base class for all package errors."""


class DimensionError(ElkoError, ValueError):
    """Matrix/vector shapes are incompatible with the requested operation."""


class DomainError(ElkoError, ValueError):
    """An argument lies outside the physical domain (e.g. mass <= 0)."""


class DirectionUndefinedError(DomainError):
    """The momentum direction is needed but |p| = 0."""


class CoordinateSingularityError(DomainError):
    """Momentum points along the -z axis where the helicity rotation is singular."""


class NoIntertwinerError(ElkoError):
    """The intertwiner equation X A = B X has no nonzero solution."""


class AmbiguousIntertwinerError(ElkoError):
    """The intertwiner solution space has dimension > 1; the caller must constrain."""

    def __init__(self, dimension, message=None):
        self.dimension = dimension
        super().__init__(message or f"intertwiner solution space has dimension {dimension}")


class UsageError(ElkoError, ValueError):
    """Invalid way of calling a top-level entry point (CLI / suite)."""
