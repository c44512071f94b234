"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class GapvirError(Exception):
    exit_code = 1


class ParseError(GapvirError, ValueError):
    """Malformed text input; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class ParameterError(GapvirError, ValueError):
    """Operands built for different gap parameters, or an out-of-range index."""


class ValidationError(GapvirError, ValueError):
    pass


class DegenerateInputError(GapvirError, ValueError):
    pass


class UnsupportedError(GapvirError):
    pass


class PreconditionError(GapvirError):
    exit_code = 3


class InvariantViolation(GapvirError, AssertionError):
    exit_code = 2


class ClassificationFailure(GapvirError):
    """An action oracle is not of the form Omega(lambda, alpha) on the window."""

    exit_code = 2

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class FingerprintFailure(GapvirError):
    exit_code = 2
