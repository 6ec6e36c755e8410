"""Exception hierarchy shared by every module."""


class ToricRegError(Exception):
    """Base class for all errors raised by toricreg."""


class ParseError(ToricRegError, ValueError):
    pass


class CertificateError(ToricRegError, ValueError):
    """A supplied or constructed certificate failed verification."""


class CapabilityError(ToricRegError, RuntimeError):
    """The requested computation exceeds a configured size cap."""


class PartialResultError(CapabilityError):
    """A cap was hit part way through; `completed` holds what finished."""

    def __init__(self, message, completed=None):
        super().__init__(message)
        self.completed = completed


class InvariantViolation(ToricRegError, AssertionError):
    """An internal postcondition failed. This indicates a bug, not bad input."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ZeroIdealError(ToricRegError, ValueError):
    """Regularity was requested for the zero ideal, where it is undefined."""
