"""Exception types shared across the package."""


class EvocribError(Exception):
    """Base class for errors raised by evocrib."""


class MalformedInputError(EvocribError, ValueError):
    """An input file violates the expected line format.

    ``line_no`` is 1-based and refers to the offending line of the source
    text, counting comment and blank lines.
    """

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message)
        self.line_no = line_no


class InvalidParamsError(EvocribError, ValueError):
    """Evolution or experiment parameters fail validation."""
