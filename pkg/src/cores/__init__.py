"""ec-cores and s-cores."""

from src.cores.cores import (
    CoreError,
    CoreResult,
    canonical_switching,
    ec_core,
    is_ec_core,
    is_s_core,
    pruned_switching_graph,
    s_core,
)

__all__ = [
    "CoreError",
    "CoreResult",
    "canonical_switching",
    "ec_core",
    "is_ec_core",
    "is_s_core",
    "pruned_switching_graph",
    "s_core",
]
