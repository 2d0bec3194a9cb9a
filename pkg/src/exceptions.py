"""
Error hierarchy for the hook Schur toolkit.

The CLI maps each family to an exit code:
- PreconditionError (and CompositeModulusError): 2
- SizeLimitError: 3
- InvariantViolation: 1
"""


class HookSchurError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(HookSchurError):
    """Invalid parameters: p does not divide m, degrees out of range, etc."""


class CompositeModulusError(PreconditionError):
    """The requested characteristic is not a prime number."""

    def __init__(self, value: int):
        super().__init__(f"p must be prime, got {value}")
        self.value = value


class SizeLimitError(HookSchurError):
    """An ambient space is larger than the configured dimension limit."""

    def __init__(self, dimension: int, limit: int, what: str = "ambient space"):
        super().__init__(
            f"{what} has dimension {dimension}, above the limit {limit} "
            f"(raise HOOKSCHUR_MAX_DIM to override)"
        )
        self.dimension = dimension
        self.limit = limit


class InvariantViolation(HookSchurError):
    """A mathematical invariant failed; this signals a bug, not bad input."""
