"""IO exceptions."""

from dioph_certify.solving.exceptions import DiophError


class ReportWriteError(DiophError, OSError):
    """Raised when a report file cannot be opened or written."""
