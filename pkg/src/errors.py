"""
Error types

Every failure raised by the lab derives from QDLError so the command line
can map it to an exit code.
"""
from typing import Optional


class QDLError(Exception):
    """Base class for all lab errors."""
    pass


class DomainError(QDLError):
    """Raised when an argument lies outside the domain of an operation."""
    pass


class PoleError(DomainError):
    """Raised at a pole; carries the Laurent data of the function there."""

    def __init__(self, message: str, residue: complex = 1.0, constant: complex = 0.0):
        super().__init__(message)
        self.residue = residue
        self.constant = constant


class UnsupportedKindError(DomainError):
    """Raised when an operation does not support a weight or test function kind."""
    pass


class ConfigError(QDLError):
    """Raised for invalid configuration or usage."""
    pass


class AccuracyError(QDLError):
    """Raised when a tolerance cannot be reached."""

    def __init__(self, message: str, achieved: Optional[float] = None):
        super().__init__(message)
        self.achieved = achieved


class ResourceError(QDLError):
    """Raised when a table or sieve would exceed the configured bound."""

    def __init__(self, message: str, required: Optional[int] = None):
        super().__init__(message)
        self.required = required


class DataQualityError(QDLError):
    """Raised when too many zero sets are incomplete."""
    pass


class VerificationError(QDLError):
    """Raised when a verification residual exceeds its tolerance."""
    pass


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the command-line exit code."""
    if isinstance(exc, ConfigError):
        return 1
    if isinstance(exc, (VerificationError, DataQualityError)):
        return 3
    if isinstance(exc, QDLError):
        return 2
    return 1
