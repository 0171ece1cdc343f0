"""Homomorphism, retraction and colouring solvers with independent checkers."""

from src.solve.colouring import colour
from src.solve.homs import (
    NotASubgraph,
    ec_hom,
    ec_isomorphism,
    ec_retract,
    hom,
    image_sign,
    s_hom,
    s_hom_paired,
    s_isomorphism,
    s_retract,
)
from src.solve.poly import decide_poly, poly_target
from src.solve.search import HomSearch
from src.solve.verify import (
    check_colouring,
    check_ec_witness,
    check_plain_witness,
    check_s_witness,
)

__all__ = [
    # Search engine
    "HomSearch",
    # Solvers
    "colour",
    "ec_hom",
    "ec_isomorphism",
    "ec_retract",
    "hom",
    "image_sign",
    "s_hom",
    "s_hom_paired",
    "s_isomorphism",
    "s_retract",
    # Polynomial cases
    "decide_poly",
    "poly_target",
    # Checkers
    "check_colouring",
    "check_ec_witness",
    "check_plain_witness",
    "check_s_witness",
    # Errors
    "NotASubgraph",
]
