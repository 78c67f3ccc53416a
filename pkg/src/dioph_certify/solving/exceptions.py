"""Solver exceptions."""


class DiophError(Exception):
    """Base class for errors raised by dioph-certify."""


class InvalidParametersError(DiophError, ValueError):
    """Raised when equation or search parameters are not positive integers."""


class PreconditionError(DiophError, ValueError):
    """Raised when a case solver is called on parameters outside its case."""


class ConfigurationError(DiophError, ValueError):
    """Raised when configuration or environment overrides cannot be parsed."""
