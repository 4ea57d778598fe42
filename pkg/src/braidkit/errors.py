"""Exception types shared across the toolkit."""


class BraidKitError(Exception):
    """Base class for all toolkit errors."""


class StrandCountMismatchError(BraidKitError):
    """Operands live in braid groups on different numbers of strands."""


class LetterIndexError(BraidKitError):
    """A generator index lies outside the valid range for the strand count."""


class BudgetExceededError(BraidKitError):
    """A resource budget (word length, coset count, state count) ran out.

    Deliberately distinct from mathematical failure: callers can retry with
    a larger budget or report the computation as inconclusive.
    """


class InvalidArcError(BraidKitError):
    """An arc description violates its structural invariants."""


class PresentationError(BraidKitError):
    """A presentation, coset table, or table file is malformed."""
