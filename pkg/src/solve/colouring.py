"""Zaslavsky k-colourings through s-homomorphisms to the colouring target."""

import logging

from src.construct.zaslavsky import zaslavsky_target
from src.models.witnesses import ColouringWitness
from src.sgraph.graph import SignedGraph
from src.solve.homs import s_hom

logger = logging.getLogger(__name__)


def colour(g: SignedGraph, k: int, zero_free: bool = False) -> ColouringWitness | None:
    """
    Find a proper k-colouring with colours in {0, +-1, ..., +-k} (no 0 when zero_free).

    A vertex mapped to colour c is coloured -c if it was switched, +c otherwise.

    Raises:
        ValueError: if k < 1
    """
    target = zaslavsky_target(k, zero_free)
    witness = s_hom(g, target)
    if witness is None:
        logger.debug("No %s%d-colouring", "zero-free " if zero_free else "", k)
        return None
    switched = set(witness.switch_set or ())
    colours = {
        v: -int(c) if v in switched else int(c) for v, c in witness.mapping.items()
    }
    return ColouringWitness(k=k, zero_free=zero_free, colours=colours)
