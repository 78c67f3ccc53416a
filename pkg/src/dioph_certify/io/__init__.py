"""Report persistence."""

from .exceptions import ReportWriteError
from .report_writer import JsonlReportWriter, dumps_record

__all__ = ["JsonlReportWriter", "ReportWriteError", "dumps_record"]
