"""Report records, check ledgers and their rendering."""

from .models import (
    CheckResult,
    check,
    fraction_matrix,
    DecompositionReport,
    InducedActionReport,
    HodgeDegree,
    HodgeReport,
    DecompositionPartsReport,
    PhiDegree,
    PhiReport,
    SequenceRow,
    SequenceReport,
    CoverRanksReport,
    CorollaryRow,
    CorollaryReport,
    VerdictReport,
    ReportSection,
    ScenarioReport,
)
from .render import seal, render, render_record, render_table

__all__ = [
    "CheckResult",
    "check",
    "fraction_matrix",
    "DecompositionReport",
    "InducedActionReport",
    "HodgeDegree",
    "HodgeReport",
    "DecompositionPartsReport",
    "PhiDegree",
    "PhiReport",
    "SequenceRow",
    "SequenceReport",
    "CoverRanksReport",
    "CorollaryRow",
    "CorollaryReport",
    "VerdictReport",
    "ReportSection",
    "ScenarioReport",
    "seal",
    "render",
    "render_record",
    "render_table",
]
