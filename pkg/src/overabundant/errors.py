"""Exception types raised by the package."""


class OverabundantError(Exception):
    """Base class for every error raised here."""


class InvalidInput(OverabundantError, ValueError):
    pass


class DevUndefined(OverabundantError, ValueError):
    """The longest infix of the queried word does not occur in the text."""


class TooLarge(OverabundantError):
    """An exhaustive search space exceeds the configured guard."""


class PlacementFailed(OverabundantError):
    pass


class ParseError(OverabundantError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
