"""
Data models for the hook Schur toolkit.

This package contains dataclass definitions for:
- RunConfig: one CLI invocation with its parameters
- ComplexSummary, CohomologyReport, CheckReport, CharacterReport: results
- SweepRow / SweepTable: the grid acceptance table
"""

from src.models.reports import (
    CharacterReport,
    CheckReport,
    CohomologyReport,
    ComplexSummary,
    DegreeCohomology,
    SweepRow,
    SweepTable,
)
from src.models.run_config import RunConfig

__all__ = [
    "CharacterReport",
    "CheckReport",
    "CohomologyReport",
    "ComplexSummary",
    "DegreeCohomology",
    "RunConfig",
    "SweepRow",
    "SweepTable",
]
