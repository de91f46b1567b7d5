"""Exception types shared across the package."""


class NotAStateError(ValueError):
    """Raised when a matrix fails the density-matrix requirements
    (an eigenvalue below -1e-10, i.e. past the rounding clamp band)."""


class NoEntanglementError(Exception):
    """Raised by threshold finders when concurrence is zero everywhere
    in the search bracket."""
