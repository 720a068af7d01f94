"""Models module initialization."""

from .reports import (
    AltEnumReport,
    CountMethod,
    CountResult,
    CriterionResult,
    LatticeRow,
    LatticeSummary,
    VerificationSummary,
)
from .witness import (
    AvalancheReport,
    Certificate,
    CertificateKind,
    EmbeddingRecord,
    FixedPointRecord,
    KClassification,
    ScatteredProbeReport,
    Verdict,
    WitnessKind,
    WitnessReport,
)

__all__ = [
    "AltEnumReport",
    "AvalancheReport",
    "Certificate",
    "CertificateKind",
    "CountMethod",
    "CountResult",
    "CriterionResult",
    "EmbeddingRecord",
    "FixedPointRecord",
    "KClassification",
    "LatticeRow",
    "LatticeSummary",
    "ScatteredProbeReport",
    "Verdict",
    "VerificationSummary",
    "WitnessKind",
    "WitnessReport",
]
