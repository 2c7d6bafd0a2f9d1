"""Shared exception types for the qbattery package."""


class ValidationError(ValueError):
    """A state, trajectory or result violates one of its invariants."""


class ConfigurationError(ValueError):
    """Parameters are individually legal but mutually inconsistent."""


class ParseError(ValueError):
    """A sweep configuration document is malformed.

    Carries the offending key and its 1-based line number when known.
    """

    def __init__(self, message, key=None, line=None):
        if key is not None:
            where = f" (key '{key}'" + (f", line {line}" if line else "") + ")"
            message = message + where
        super().__init__(message)
        self.key = key
        self.line = line


class SolverFailure(RuntimeError):
    """An integrator could not advance to the requested horizon.

    ``last_good_time`` is the largest time at which the solution was still
    accepted before the failure.
    """

    def __init__(self, message, last_good_time=0.0):
        super().__init__(message)
        self.last_good_time = float(last_good_time)
