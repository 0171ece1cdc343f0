"""Data models for witnesses, certificates and verdicts."""

from src.models.classification import (
    Classification,
    HardCase,
    HardnessWitness,
    PolyCase,
    PolyDecision,
    VerdictKind,
)
from src.models.witnesses import (
    CertificateKind,
    ColouringWitness,
    EquivCertificate,
    HomKind,
    HomWitness,
)

__all__ = [
    # Witness models
    "CertificateKind",
    "ColouringWitness",
    "EquivCertificate",
    "HomKind",
    "HomWitness",
    # Classification models
    "Classification",
    "HardCase",
    "HardnessWitness",
    "PolyCase",
    "PolyDecision",
    "VerdictKind",
]
