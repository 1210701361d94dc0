"""Exception hierarchy shared across the package."""

from __future__ import annotations


class CasimirError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CasimirError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class TableRangeError(DomainError):
    """A frequency falls outside a permittivity table (no extrapolation)."""


class UnsupportedModelError(CasimirError, TypeError):
    """The operation is not defined for the given material model."""


class ConvergenceError(CasimirError):
    """An iterative computation failed to converge.

    Carries the best estimate achieved so far in ``estimate``.
    """

    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate


class BracketError(CasimirError, ValueError):
    """A root bracket does not actually bracket a sign change."""


class FitError(CasimirError):
    """A least-squares fit failed its residual gate.

    ``coeff`` and ``residual`` hold the rejected fit values when available.
    """

    def __init__(self, message: str, coeff: float | None = None,
                 residual: float | None = None):
        super().__init__(message)
        self.coeff = coeff
        self.residual = residual


class ConfigError(CasimirError, ValueError):
    """Invalid run configuration (CLI exit code 2)."""


class TableFormatError(ConfigError):
    """A permittivity table file is malformed; message carries the line number."""


class ApplicabilityWarning(UserWarning):
    """A result was computed outside its guaranteed regime of validity."""
