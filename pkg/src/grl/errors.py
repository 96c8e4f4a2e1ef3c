class GRLError(Exception):
    """Base class for errors raised by this package."""


class DomainError(GRLError, ValueError):
    """An argument lies outside the operation's domain (e.g. a subset index out of range)."""


class CapacityTooLargeError(GRLError):
    """An exhaustive enumeration was requested on a ground set beyond its size guard."""


class GenerationError(GRLError):
    """Random instance generation failed to reach the requested kind."""


class ScenarioError(GRLError):
    """A scenario or capacity document failed to parse or validate.

    ``path`` is the JSON path of the offending element and ``line`` the
    1-based source line when it could be located.
    """

    def __init__(self, message: str, path: str = "", line: int | None = None):
        super().__init__(message)
        self.message = message
        self.path = path
        self.line = line

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line else ""
        at = f" (at {self.path})" if self.path else ""
        return f"{where}{self.message}{at}"
