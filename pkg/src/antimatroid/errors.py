"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotAntimatroidError(DomainError):
    """A family (or language) fails the antimatroid axioms required by the caller."""


class EmptyContinuationError(DomainError):
    """Psi(X) is empty on a set where a continuation is required.

    ``stuck`` holds the offending set as a bitmask.
    """

    def __init__(self, message: str, stuck: int):
        super().__init__(message)
        self.stuck = stuck


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the configured budget."""


class VerificationError(AssertionError):
    """A cross-check enabled by verification mode failed."""
