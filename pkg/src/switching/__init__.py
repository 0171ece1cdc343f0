"""Switching operations, cycle signs, balance and certified switching equivalence."""

from src.switching.equivalence import (
    GraphMismatch,
    NotAWalk,
    NotClosed,
    closed_walk_sign,
    equivalent,
    fundamental_cycles,
    is_balanced,
    same_cycle_signs,
    same_signature,
    switch,
    verify_certificate,
)

__all__ = [
    # Operations
    "closed_walk_sign",
    "equivalent",
    "is_balanced",
    "switch",
    # Cross-checks
    "fundamental_cycles",
    "same_cycle_signs",
    "same_signature",
    "verify_certificate",
    # Errors
    "GraphMismatch",
    "NotAWalk",
    "NotClosed",
]
