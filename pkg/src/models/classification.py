"""
Models for complexity verdicts.

These are the outputs of the classifier and of the polynomial-case deciders.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, InstanceOf, field_serializer

from src.sgraph.graph import Sign, SignedGraph
from src.sgraph.sgf import serialize


class PolyCase(str, Enum):
    """Shapes of an s-core with at most two edges."""

    BOTH_LOOPS = "BothLoops"
    SINGLE_NEGATIVE_LOOP = "SingleNegativeLoop"
    SINGLE_POSITIVE_LOOP = "SinglePositiveLoop"
    SINGLE_EDGE = "SingleEdge"
    NEGATIVE_DIGON = "NegativeDigon"
    EDGELESS = "Edgeless"


class HardCase(str, Enum):
    """Which hardness argument applies."""

    DIGON = "a"  # negative digon in the core
    NEGATIVE_EVEN_CYCLE = "b"
    ODD_CYCLE_WITHOUT_LOOP = "c"  # odd cycle, no loop of its sign
    LOOPS_OF_BOTH_SIGNS = "d"
    DIGON_WITH_BOTH_LOOPS = "D"  # the two-vertex digon with a loop of each sign


class VerdictKind(str, Enum):
    POLYNOMIAL = "Polynomial"
    NP_COMPLETE = "NPComplete"
    CONJECTURED_NP_COMPLETE = "ConjecturedNPComplete"


class PolyDecision(BaseModel):
    """Answer of a polynomial-case decider with its certificate."""

    model_config = ConfigDict(frozen=True)

    case: PolyCase
    accepted: bool
    reason: str
    switch_set: tuple[str, ...] | None = Field(
        default=None, description="Switching that brings the instance to the target's sign"
    )
    side: tuple[str, ...] | None = Field(
        default=None, description="One colour class of a bipartition"
    )
    obstruction: tuple[str, ...] | None = Field(
        default=None, description="Rejecting loop vertex, odd cycle or negative cycle"
    )

    def __bool__(self) -> bool:
        return self.accepted


class HardnessWitness(BaseModel):
    """
    Structural evidence for an NP-complete verdict.

    Cases a and c: `cycle` is a monochromatic odd cycle of sign `cycle_sign` in
    the switching graph of the core (a) or in the core itself (c).
    Cases b, d and D: `cycle` is an odd cycle of the loop-free plain graph
    `indicator_result`, built on the switching graph of the core after
    switching at `switch_set`.
    """

    model_config = ConfigDict(frozen=True)

    case: HardCase
    cycle: tuple[str, ...]
    cycle_sign: Sign | None = None
    switch_set: tuple[str, ...] = ()
    source_walk: tuple[str, ...] | None = Field(
        default=None, description="Negative even cycle (b) or loop-to-loop path (d) in the core"
    )
    indicator_result: InstanceOf[SignedGraph] | None = None
    plain_core: InstanceOf[SignedGraph] | None = None

    @field_serializer("indicator_result", "plain_core")
    def dump_graph(self, g: SignedGraph | None) -> str | None:
        return None if g is None else serialize(g)


class Classification(BaseModel):
    """Verdict for the s-homomorphism problem of a connected target."""

    model_config = ConfigDict(frozen=True)

    verdict: VerdictKind
    poly_case: PolyCase | None = None
    hard_case: HardCase | None = None
    s_core: InstanceOf[SignedGraph]
    witness: HardnessWitness | None = None

    @field_serializer("s_core")
    def dump_core(self, g: SignedGraph) -> str:
        return serialize(g)

    @property
    def label(self) -> str:
        if self.verdict is VerdictKind.POLYNOMIAL:
            return f"Polynomial({self.poly_case.value})"
        if self.verdict is VerdictKind.NP_COMPLETE:
            return f"NPComplete({self.hard_case.value})"
        return self.verdict.value

    @property
    def is_polynomial(self) -> bool:
        return self.verdict is VerdictKind.POLYNOMIAL
