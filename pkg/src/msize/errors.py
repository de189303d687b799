"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Two objects disagree on the dimension k of the measuring function."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
