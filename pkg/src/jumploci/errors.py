"""Exception hierarchy shared across the package.

PreconditionError covers rejected inputs (CLI exit code 2); DegeneracyError
covers inputs the algorithms refuse to certify (CLI exit code 3).
"""


class JumplociError(Exception):
    pass


class PreconditionError(JumplociError):
    pass


class DegeneracyError(JumplociError):
    pass


class ParseError(PreconditionError):
    """Invalid serialized input; `location` is the offending field path."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None
                         else f"{location}: {message}")
        self.location = location
