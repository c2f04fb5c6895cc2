"""Exception hierarchy.

Input/validation problems derive from ``InputError`` (CLI exit code 2);
``ConsistencyError`` flags an internal cross-check failure (exit code 3).
"""


class GaussForgeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GaussForgeError, ValueError):
    """Malformed or out-of-contract input."""


class MalformedToken(InputError):
    pass


class ChordSeenOnceOrThrice(InputError):
    pass


class SignMismatch(InputError):
    pass


class DuplicateRole(InputError):
    pass


class AlreadyClosed(InputError):
    pass


class NotClosed(InputError):
    pass


class RequiresBasePoint(InputError):
    pass


class NoSuchChord(InputError):
    pass


class TooManyChords(InputError):
    pass


class TooLarge(InputError):
    pass


class InvalidSite(InputError):
    pass


class ConsistencyError(GaussForgeError):
    """An internal invariant failed (self-check, not user input)."""
