"""Graph constructions: switching graphs, indicators, colouring targets and gadgets."""

from src.construct.errors import (
    ConstructionError,
    DisconnectedInput,
    EmbeddingMismatch,
    IndexOutOfRange,
    InvalidRunWord,
    NoSwapAutomorphism,
    NotBipartite,
    ParityError,
)
from src.construct.gadgets import (
    GadgetFamily,
    GadgetPath,
    RetractionInstance,
    RetractionTarget,
    RunWord,
    alternating_path,
    build_retraction_instance,
    build_retraction_target,
    gadget_path,
    gadget_word,
    unanchored_images,
)
from src.construct.indicator import (
    Indicator,
    alternating_square_indicator,
    digon_indicator,
    indicator_result,
    is_swap_automorphism,
    path_indicator,
    swap_automorphism,
    symmetrize,
)
from src.construct.switching_graph import PairedGraph, copy_name, switching_graph
from src.construct.zaslavsky import zaslavsky_target

__all__ = [
    # Switching graphs
    "PairedGraph",
    "copy_name",
    "switching_graph",
    # Indicators
    "Indicator",
    "alternating_square_indicator",
    "digon_indicator",
    "indicator_result",
    "is_swap_automorphism",
    "path_indicator",
    "swap_automorphism",
    "symmetrize",
    # Colouring targets
    "zaslavsky_target",
    # Gadgets and the retraction reduction
    "GadgetFamily",
    "GadgetPath",
    "RetractionInstance",
    "RetractionTarget",
    "RunWord",
    "alternating_path",
    "build_retraction_instance",
    "build_retraction_target",
    "gadget_path",
    "gadget_word",
    "unanchored_images",
    # Errors
    "ConstructionError",
    "DisconnectedInput",
    "EmbeddingMismatch",
    "IndexOutOfRange",
    "InvalidRunWord",
    "NoSwapAutomorphism",
    "NotBipartite",
    "ParityError",
]
