"""Exception types shared across the package."""

INT64_MAX = 2**63 - 1


class ParikhError(Exception):
    """Base class for all errors raised by this package."""


class LetterOutsideAlphabet(ParikhError, ValueError):
    pass


class AlphabetTooLarge(ParikhError, ValueError):
    pass


class IndexOutOfRange(ParikhError, IndexError):
    pass


class DimensionMismatch(ParikhError, ValueError):
    pass


class PreconditionViolated(ParikhError, ValueError):
    pass


class ArithmeticOverflow(ParikhError, OverflowError):
    """An exact count no longer fits in a signed 64-bit integer."""


class ClosureBudgetExceeded(ParikhError, RuntimeError):
    """A rewriting closure grew past its member cap."""


class BudgetExceeded(ParikhError, RuntimeError):
    """An exhaustive run would exceed its configured work budget."""


def checked(value):
    if value > INT64_MAX:
        raise ArithmeticOverflow(f"count {value} exceeds 64-bit range")
    return value
