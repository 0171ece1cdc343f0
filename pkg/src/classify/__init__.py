"""Dichotomy classifier and independent witness checks."""

from src.classify.classifier import (
    ClassificationError,
    Disconnected,
    classify,
    in_restricted_family,
    is_digon_with_both_loops,
    loop_path_cycle,
    poly_case,
)
from src.classify.witness_check import digon_relation, hardness_witness_check, square_relation

__all__ = [
    # Classifier
    "classify",
    "in_restricted_family",
    "is_digon_with_both_loops",
    "loop_path_cycle",
    "poly_case",
    # Witness checks
    "digon_relation",
    "hardness_witness_check",
    "square_relation",
    # Errors
    "ClassificationError",
    "Disconnected",
]
