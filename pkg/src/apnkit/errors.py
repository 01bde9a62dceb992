"""Exception types shared across the package."""


class TheoremContradiction(Exception):
    """A computed result contradicts an unconditional structural theorem.

    This never signals bad input data: the guarded statements hold for every
    valid input, so raising it means the implementation itself is wrong.
    The attached report carries the violating witness.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CorruptedFixture(Exception):
    """A bundled fixture table failed its self-validation contract on load."""


class SboxFormatError(ValueError):
    """S-box text could not be parsed; carries the 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
