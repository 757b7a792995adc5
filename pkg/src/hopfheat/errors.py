"""Exception types shared by all hopfheat modules."""


class HopfHeatError(Exception):
    """Base class for all library errors."""


class DomainError(HopfHeatError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class AccuracyError(HopfHeatError, RuntimeError):
    """A series, quadrature or solver could not reach the requested accuracy.

    The best available error estimate is carried in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SolverError(HopfHeatError, RuntimeError):
    """A root finder failed to bracket or converge."""


class CalibrationError(HopfHeatError, RuntimeError):
    """A constant fit failed its internal consistency (shape) check."""
