"""Storage module - Sequence files and report persistence."""

from .serializers import (
    parse_sequences,
    format_sequences,
    read_sequences,
    write_sequences,
    versioned,
    dumps,
    check_schema,
)
from .report_storage import ReportStorage

__all__ = [
    'parse_sequences',
    'format_sequences',
    'read_sequences',
    'write_sequences',
    'versioned',
    'dumps',
    'check_schema',
    'ReportStorage',
]
