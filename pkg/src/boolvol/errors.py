"""Shared exception types.

The CLI maps ValidationError (and subclasses) to exit code 2 and
NumericError (and subclasses) to exit code 3.
"""


class BoolvolError(Exception):
    """Base class for all library errors."""


class ValidationError(BoolvolError, ValueError):
    """Invalid input: bad arguments, violated preconditions, malformed config."""


class NumericError(BoolvolError, RuntimeError):
    """Numeric failure: non-convergence, ill-conditioning, exhausted resampling."""


class GeneralPositionError(ValidationError):
    """Points violate the affine-independence condition required by the caller."""


class NotReadOnceError(ValidationError):
    """Formula is not built from |, &, \\ with every variable used exactly once."""


class StructuralViolationError(ValidationError):
    """Pair substitution produced conflicting two-variable forms, or none at all."""


class TieError(NumericError):
    """A scalar product fell inside the tie tolerance; resample the direction."""
