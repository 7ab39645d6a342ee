"""Exception hierarchy shared across the package."""


class DimerqError(Exception):
    """Base class for all package-specific errors."""


class ResourceLimitError(DimerqError):
    """An input exceeds a documented resource guard (grid size, degree cap, ...)."""


class CertificationError(DimerqError):
    """A computation exhausted its precision schedule without certifying a result."""


class InternalInvariantError(DimerqError):
    """An exact invariant that can only fail through an arithmetic bug was violated."""
