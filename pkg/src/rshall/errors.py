"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RshallError(Exception):
    """Base class for all errors raised by rshall."""


class ArgumentError(RshallError, ValueError):
    """Inputs violate an operation's preconditions (dimension mismatch, bad syntax)."""


class ResourceLimitError(RshallError):
    """The requested computation exceeds the configured desk-scale budget."""


class InterpolationError(RshallError):
    """Sample data does not come from an integer polynomial of the assumed degree."""


class PoleError(RshallError, ZeroDivisionError):
    """A denominator vanished (division by zero or specialization at a pole)."""


class VerificationError(RshallError, AssertionError):
    """An internal identity that must hold by theory was found to fail."""
