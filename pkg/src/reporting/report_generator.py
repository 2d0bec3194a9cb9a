import csv
import json
from pathlib import Path
from typing import Optional, Union

from src.models.reports import (
    CharacterReport,
    CheckReport,
    CohomologyReport,
    ComplexSummary,
    SweepTable,
)

SCHEMA_VERSION = 1

Report = Union[
    CharacterReport, CheckReport, CohomologyReport, ComplexSummary, SweepTable
]

_REPORT_TYPES = {
    "character": CharacterReport,
    "check": CheckReport,
    "cohomology": CohomologyReport,
    "complex": ComplexSummary,
    "sweep": SweepTable,
}
_TYPE_NAMES = {cls: name for name, cls in _REPORT_TYPES.items()}


def to_json(report: Report) -> str:
    """Deterministic JSON document: sorted keys, no timestamps."""
    document = {
        "schema": SCHEMA_VERSION,
        "report": _TYPE_NAMES[type(report)],
        "passed": report.passed,
        "data": report.to_dict(),
    }
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def from_json(text: str) -> Report:
    """Parse a document written by to_json back into its report record."""
    document = json.loads(text)
    if document.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {document.get('schema')!r}")
    return _REPORT_TYPES[document["report"]].from_dict(document["data"])


def to_text(report: Report) -> str:
    return "\n".join(report.summary_lines())


def write_sweep_csv(table: SweepTable, file_path: Path) -> Path:
    """One row per grid cell, in grid order."""
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    fieldnames = [
        "m",
        "p",
        "n",
        "status",
        "cohomology_dims",
        "expected_dims",
        "frobenius_ok",
        "identity_ok",
        "detail",
    ]
    with open(file_path, "w", newline="", encoding="utf-8") as output_file:
        dict_writer = csv.DictWriter(output_file, fieldnames=fieldnames)
        dict_writer.writeheader()
        dict_writer.writerows(row.to_dict() for row in table.rows)
    return file_path


class ReportWriter:
    """Renders a report as text or JSON and writes it to a file if asked."""

    def __init__(self, output_format: str = "text", output_path: Optional[str] = None):
        if output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {output_format!r}")
        self.output_format = output_format
        self.output_path = Path(output_path) if output_path else None

    def render(self, report: Report) -> str:
        if self.output_format == "json":
            return to_json(report)
        return to_text(report)

    def save(self, report: Report) -> Optional[Path]:
        """Write to output_path; sweep tables go to CSV when the path ends in .csv."""
        if self.output_path is None:
            return None
        if isinstance(report, SweepTable) and self.output_path.suffix == ".csv":
            return write_sweep_csv(report, self.output_path)
        self.output_path.parent.mkdir(parents=True, exist_ok=True)
        self.output_path.write_text(self.render(report) + "\n", encoding="utf-8")
        return self.output_path
