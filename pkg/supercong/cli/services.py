# cli/services.py
import csv
import json
import logging
from collections import Counter
from typing import Iterable

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError
from rest_framework import serializers

from padic.exceptions import NoRepresentation
from registry.serializers import RECORD_FIELDS, VerificationResultSerializer
from registry.types import Status, VerificationResult

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

VERBOSITY_LEVELS = {
    0: logging.ERROR,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}

ENGINE_LOGGERS = ('registry', 'wzcert', 'cli')

# column widths of the human table
TABLE_COLUMNS = (
    ('id', 18), ('p', 6), ('status', 14), ('modulus', 12), ('branch', 24), ('a', 8),
    ('x', 6), ('y', 6), ('elapsed_ms', 10),
)


def configure_verbosity(verbosity: int):
    """Maps --verbosity onto the engine loggers; 1 keeps the configured levels."""
    if verbosity == 1:
        return
    level = VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)
    for name in ENGINE_LOGGERS:
        logging.getLogger(name).setLevel(level)


def exit_code_for(error: Exception) -> int:
    """Bad input maps to a usage error, anything else to an internal one."""
    if isinstance(error, (ValidationError, serializers.ValidationError, NoRepresentation)):
        return EXIT_USAGE
    return EXIT_INTERNAL


def command_error(error: Exception) -> CommandError:
    return CommandError(str(error), returncode=exit_code_for(error))


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=EXIT_USAGE)


def format_errors(errors) -> str:
    """Flattens serializer errors into one line per field."""
    lines = []
    for field, messages in errors.items():
        if isinstance(messages, (list, tuple)):
            text = '; '.join(str(m) for m in messages)
        else:
            text = str(messages)
        lines.append(f"{field}: {text}")
    return '\n'.join(lines)


def run_exit_code(statuses: Iterable[Status]) -> int:
    """
    Exit code of a verification run.

    Any Fail gives 1; otherwise a PrecisionError gives 3. NotApplicable and
    Pole results never fail a run.
    """
    statuses = set(statuses)
    if Status.FAIL in statuses:
        return EXIT_FAILURE
    if Status.PRECISION_ERROR in statuses:
        return EXIT_INTERNAL
    return EXIT_OK


class ReportWriter:
    """
    Streams verification records to a text stream in one report format.

    json-lines and csv share RECORD_FIELDS as their columns; table is for
    reading at a terminal.
    """

    def __init__(self, stream, fmt: str, timings: bool = True):
        self.stream = stream
        self.fmt = fmt
        self.timings = timings
        self.counts = Counter()
        self._csv = None
        if fmt == 'csv':
            self._csv = csv.DictWriter(stream, fieldnames=RECORD_FIELDS, lineterminator='\n')
            self._csv.writeheader()
        elif fmt == 'table':
            self.stream.write(self._row({name: name for name, _ in TABLE_COLUMNS}) + '\n')

    def write(self, result: VerificationResult):
        self.counts[result.status] += 1
        record = VerificationResultSerializer(result, timings=self.timings).data
        if self.fmt == 'json-lines':
            self.stream.write(json.dumps(record) + '\n')
        elif self.fmt == 'csv':
            self._csv.writerow(record)
        else:
            self.stream.write(self._row(record) + '\n')

    @staticmethod
    def _row(record) -> str:
        cells = []
        for name, width in TABLE_COLUMNS:
            value = record.get(name)
            cells.append(('-' if value is None else str(value)).ljust(width))
        return ' '.join(cells).rstrip()

    def summary(self) -> str:
        parts = [f"{status.value}={self.counts[status]}" for status in Status
                 if self.counts[status]]
        return f"{sum(self.counts.values())} checks: " + (', '.join(parts) or 'none')
