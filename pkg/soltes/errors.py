class SoltesError(Exception):
    """Common superclass for the errors raised by this package."""

    code = 'ERROR'


class InvalidHypergraphError(SoltesError):
    code = 'INVALID_HYPERGRAPH'


class InvalidGraphError(SoltesError):
    code = 'INVALID_GRAPH'


class NotConnectedError(SoltesError):
    code = 'NOT_CONNECTED'


class ParamOutOfRangeError(SoltesError):
    code = 'PARAM_OUT_OF_RANGE'


class BadConventionError(SoltesError):
    code = 'BAD_CONVENTION'


class AllZeroError(SoltesError):
    code = 'ALL_ZERO'


class NegativeWeightError(SoltesError):
    code = 'NEGATIVE_WEIGHT'


class InvariantViolation(SoltesError):
    """Raised when an identity that must hold for every input fails."""

    code = 'INVARIANT_VIOLATION'


class FormatError(SoltesError):
    """Raised when a .hg or .wg document cannot be read.

    When the problem is a syntax error, `line` and `column` point at the
    offending character (both 1-based).
    """

    code = 'PARSE_ERROR'

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f'{message} (line {line}, column {column})'
        super().__init__(message)
        self.line = line
        self.column = column
