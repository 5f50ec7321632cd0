"""Error types shared by every sub-package.

Each class carries the exit status the CLI reports for it.
"""


class SubpermError(Exception):
    """Base class for domain errors."""

    exit_code = 2


class InvalidInputError(SubpermError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedInputError(SubpermError, ValueError):
    """The input is well formed but outside the operation's domain (e.g. a host containing 123)."""


class ResourceLimitError(SubpermError, RuntimeError):
    """A request exceeds a configured ceiling (oracle size, search budget)."""

    exit_code = 3


class SearchBudgetExceeded(ResourceLimitError):
    """Pattern search ran out of node expansions."""

    def __init__(self, budget: int):
        super().__init__(f"pattern search exceeded {budget} node expansions")
        self.budget = budget


class NumericFailureError(SubpermError, ArithmeticError):
    """Root bracketing or an exact recurrence failed."""


class UndefinedConditionalError(SubpermError, ZeroDivisionError):
    """A conditional probability has a zero denominator."""


class AcceptanceCheckError(SubpermError, AssertionError):
    """An oracle cross-check disagreed."""

    exit_code = 4


USAGE_EXIT_CODE = 1
