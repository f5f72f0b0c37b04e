"""Exception types shared across the package."""


class LamphoroError(Exception):
    """Base class for all package errors."""


class ParseError(LamphoroError, ValueError):
    """Malformed lamp-stand, word, horofunction or sequence literal."""

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ResourceLimitError(LamphoroError, RuntimeError):
    """A requested computation exceeds a configured cap."""


class OutOfBallError(LamphoroError, LookupError):
    """Element lies outside an enumerated ball, so its distance is unknown."""


class InvalidRayError(LamphoroError, ValueError):
    """A word prefix does not describe a geodesic ray."""


class UnsupportedInputError(LamphoroError, ValueError):
    """Input violates an operation's precondition."""


class IndexRangeError(LamphoroError, IndexError):
    """Sequence index below the sequence's start index."""
