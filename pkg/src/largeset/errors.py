"""Exception types shared across the package."""


class LargesetError(Exception):
    """Base class for all errors raised by largeset."""


class FamilyMismatch(LargesetError, TypeError):
    """An element, set or window does not belong to the expected group family."""


class WindowTooLarge(LargesetError):
    """A window enumeration would exceed the configured element cap."""


class BudgetExhausted(LargesetError):
    """An exact search ran out of its node budget.

    ``best`` carries whatever partial answer the search had found, so callers
    can turn it into a lower-bound report instead of failing outright.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ConfigError(LargesetError, ValueError):
    """Malformed experiment configuration."""


class PreconditionError(LargesetError, ValueError):
    """An operation was called on input outside its stated domain."""
