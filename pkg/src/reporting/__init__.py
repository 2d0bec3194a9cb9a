"""
Report writers: schema-versioned JSON, plain text and CSV sweep tables.
"""

from src.reporting.report_generator import (
    SCHEMA_VERSION,
    ReportWriter,
    from_json,
    to_json,
    to_text,
    write_sweep_csv,
)

__all__ = [
    "SCHEMA_VERSION",
    "ReportWriter",
    "from_json",
    "to_json",
    "to_text",
    "write_sweep_csv",
]
