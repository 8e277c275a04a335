"""Exception types raised by qgliqa."""


class QglError(Exception):
    """Base class for all qgliqa errors."""


class InvalidParameterError(QglError, ValueError):
    """A numeric parameter (scale, constant, ratio) is out of its domain."""


class InvalidArgumentError(QglError, ValueError):
    """Arguments are individually valid but incompatible (shape mismatch etc.)."""


class DegenerateInputError(QglError, ValueError):
    """The input is too small or too flat for the requested operation."""


class UndefinedCorrelationError(QglError, ValueError):
    """A rank correlation was requested on a constant vector."""


class DataValidationError(QglError, ValueError):
    """A manifest or image failed validation.

    ``rows`` holds the 1-based manifest line numbers at fault, if any.
    """

    def __init__(self, message, rows=()):
        super().__init__(message)
        self.rows = tuple(rows)
