"""Exception types shared across the package."""


class EditDetectError(Exception):
    """Base class for all errors raised by this library."""


class RangeViolation(EditDetectError, ValueError):
    """A parameter violates an inequality required by its code family."""


class NonDivisible(EditDetectError, ValueError):
    """The block length does not divide the codeword length."""


class LengthMismatch(EditDetectError, ValueError):
    """An input string has the wrong length for the requested operation."""


class MalformedReceived(EditDetectError, ValueError):
    """A received string cannot have been produced under the channel contract."""


class BudgetExceeded(EditDetectError, ValueError):
    """An error pattern exceeds the per-block edit budget of its family."""


class GapOutOfRange(EditDetectError, ValueError):
    """A deletion position or insertion gap lies outside the block."""


class TooLarge(EditDetectError, ValueError):
    """An exhaustive operation would exceed its enumeration guard."""


class Unreachable(EditDetectError, ValueError):
    """The received string cannot be reached from the given codeword."""


class PatternSyntaxError(EditDetectError, ValueError):
    """An error-pattern string does not follow the pattern grammar."""
