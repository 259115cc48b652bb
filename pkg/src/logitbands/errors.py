"""Exception hierarchy.

Each family maps to a distinct CLI exit code so scripted callers can tell
bad input apart from a numerical failure.
"""

from __future__ import annotations


class BandsError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(BandsError, ValueError):
    """Unreadable or invalid input data."""

    exit_code = 3


class ParseError(InputError):
    """Malformed CSV content.  ``line`` is 1-based and counts the header."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(InputError):
    """A row parsed but violates a field invariant (e.g. successes > trials)."""


class DegenerateDesignError(InputError):
    """Fewer than two distinct predictor values; the information matrix is singular."""


class FitError(BandsError):
    """Maximum-likelihood fitting failed."""

    exit_code = 4


class NonConvergenceError(FitError):
    def __init__(self, message: str, last_iterate=None, iterations: int = 0):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.iterations = iterations


class SeparationError(FitError):
    """The data are (quasi-)completely separated, so no finite MLE exists."""


class DegenerateInformationError(FitError):
    """The Fisher information matrix is singular at the requested coefficients."""


class GeometryError(BandsError):
    """Square root, cone angle or standard error could not be formed."""

    exit_code = 5


class NotPSDError(GeometryError):
    pass


class SolverError(BandsError):
    """Critical-value root finding failed."""

    exit_code = 6


class SimulationError(BandsError):
    """Every Monte Carlo replication failed to produce a usable fit."""

    exit_code = 7
