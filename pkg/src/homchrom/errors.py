"""Shared exception types."""


class HomchromError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(HomchromError):
    """A graph, map or parameter failed validation."""


class BudgetExceededError(HomchromError):
    """A search or enumeration ran out of its explicit budget.

    Carries the count reached so callers can report partial progress.
    """

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached


class NonFreeActionError(HomchromError):
    """An involution expected to be free fixes a cell or simplex."""

    def __init__(self, message, fixed=None):
        super().__init__(message)
        self.fixed = fixed
