"""
JSONL report writer.

One JSON object per line, UTF-8, LF line endings, keys sorted so that reruns
produce byte-identical files.
"""

import json
import logging
from pathlib import Path
from typing import IO, Any, Mapping, Optional, Union

from dioph_certify.io.exceptions import ReportWriteError

logger = logging.getLogger(__name__)


def dumps_record(record: Mapping[str, Any], indent: Optional[int] = None) -> str:
    """Stable JSON encoding of one record (no trailing newline)."""
    return json.dumps(record, sort_keys=True, ensure_ascii=False, indent=indent)


class JsonlReportWriter:
    """
    Single writer for a JSONL report file.

    The file is truncated on open, so rerunning a sweep with the same spec
    overwrites it. Use as a context manager.

    Example:
        with JsonlReportWriter(path) as writer:
            writer.write({"case": "Case5"})
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self._handle: Optional[IO[str]] = None
        self.records_written = 0

    def open(self) -> "JsonlReportWriter":
        """
        Open (and truncate) the output file.

        Raises:
            ReportWriteError: If the file or its directory cannot be created
        """
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._handle = self.path.open("w", encoding="utf-8", newline="\n")
        except OSError as e:
            raise ReportWriteError(f"Cannot open report file {self.path}: {e}") from e
        logger.debug(f"Writing report to {self.path}")
        return self

    def write(self, record: Mapping[str, Any]) -> None:
        if self._handle is None:
            raise ReportWriteError(f"Report file {self.path} is not open")
        try:
            self._handle.write(dumps_record(record) + "\n")
        except OSError as e:
            raise ReportWriteError(f"Cannot write to report file {self.path}: {e}") from e
        self.records_written += 1

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None
            logger.debug(f"Closed {self.path} after {self.records_written} records")

    def __enter__(self) -> "JsonlReportWriter":
        return self.open()

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()
