"""Exception hierarchy shared by every module."""


class GysinError(Exception):
    """Base class for all engine errors."""


class NotDivisible(GysinError, ArithmeticError):
    """Exact division left a nonzero remainder.

    ``fraction`` is set when the failure came from certifying a fraction,
    so callers can report the residual quotient.
    """

    def __init__(self, message, *, dividend=None, divisor=None, fraction=None):
        super().__init__(message)
        self.dividend = dividend
        self.divisor = divisor
        self.fraction = fraction


class EnumerationCapExceeded(GysinError):
    pass


class IncompatibleComposition(GysinError, ValueError):
    pass


class UnsupportedConfiguration(GysinError, ValueError):
    pass


class InvarianceError(GysinError, ValueError):
    """Input class is not invariant under the parabolic Weyl group."""


class ParseError(GysinError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
