"""Brute-force oracles and the generated test corpus."""

from src.oracle.brute import (
    SizeBound,
    bf_colouring,
    bf_ec_hom,
    bf_equivalent,
    bf_plain_hom,
    bf_s_hom,
    check_bounds,
    within_bounds,
)
from src.oracle.corpus import (
    exhaustive_graphs,
    random_graph,
    random_graphs,
    random_pairs,
    resign,
)
from src.oracle.cycles import SignedCycle, bf_s_hom_via_cycles, enumerate_cycles

__all__ = [
    # Brute force
    "bf_colouring",
    "bf_ec_hom",
    "bf_equivalent",
    "bf_plain_hom",
    "bf_s_hom",
    "bf_s_hom_via_cycles",
    "check_bounds",
    "within_bounds",
    # Cycles
    "SignedCycle",
    "enumerate_cycles",
    # Corpus
    "exhaustive_graphs",
    "random_graph",
    "random_graphs",
    "random_pairs",
    "resign",
    # Errors
    "SizeBound",
]
