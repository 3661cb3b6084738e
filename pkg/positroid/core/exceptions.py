# positroid/core/exceptions.py
from typing import Any, List, Optional, Tuple


class PositroidError(Exception):
    """Base class for every error raised by the toolkit."""

    pass


class DiagramError(PositroidError):
    """Exception raised for malformed Le-diagram input."""

    pass


class LePropertyError(DiagramError):
    """Exception raised when a diagram has an empty box with a dot above and a dot to its left."""

    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        super().__init__(message)
        self.violations = violations or []


class PreconditionError(PositroidError):
    """Exception raised when an operation's precondition does not hold."""

    pass


class MatroidError(PositroidError):
    """Exception raised for invalid basis sets or kernel misuse."""

    pass


class TheoremViolationError(PositroidError):
    """Raised when a simple connected positroid of rank >= 3 has no positive coline."""

    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

    def __reduce__(self) -> Tuple[Any, ...]:
        # keep the diagnostics when raised inside a verify worker process
        return (type(self), (str(self), self.diagnostics))


class UsageError(Exception):
    """Exception raised for command-line grammar errors."""

    pass


class TransportError(PositroidError):
    """Exception raised when an output transport cannot write."""

    pass
