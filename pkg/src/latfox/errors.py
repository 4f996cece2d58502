"""Exception types shared across the package."""


class LatfoxError(Exception):
    """Base class for all errors raised by this package."""


class UniverseMismatch(LatfoxError):
    """Two bit vectors over different universes were combined."""


class ParseError(LatfoxError):
    """Malformed input text.

    Carries the 1-based line number where parsing failed.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DocumentError(LatfoxError):
    """A diagram document is malformed or internally inconsistent."""


class NameCollision(LatfoxError):
    """An object or attribute name is already taken."""


class NotFound(LatfoxError):
    """A named object, attribute or session does not exist."""
