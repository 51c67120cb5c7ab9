"""Wire records and output renderers for taxicab-forge"""

from src.data.models import (
    CertificationRecord,
    IdentityRecord,
    RadicalRecord,
    RecurrenceRecord,
    RecurrenceSummaryRecord,
    RepresentationRecord,
    SeedRecord,
    SeriesRecord,
    SolutionRecord,
)

__all__ = [
    "CertificationRecord",
    "IdentityRecord",
    "RadicalRecord",
    "RecurrenceRecord",
    "RecurrenceSummaryRecord",
    "RepresentationRecord",
    "SeedRecord",
    "SeriesRecord",
    "SolutionRecord",
]
