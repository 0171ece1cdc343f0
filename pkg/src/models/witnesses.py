"""
Witness and certificate models.

Solver answers are returned as pydantic models so they can be re-checked
independently of the code that produced them and dumped as JSON by the CLI.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.sgraph.graph import Sign


class HomKind(str, Enum):
    """Which homomorphism notion a witness certifies."""

    PLAIN = "plain"
    EC = "ec"
    S = "s"


class HomWitness(BaseModel):
    """Vertex map, optional switch set and optional edge map."""

    model_config = ConfigDict(frozen=True)

    kind: HomKind
    mapping: dict[str, str] = Field(description="Vertex map, source vertex -> target vertex")
    switch_set: tuple[str, ...] | None = Field(
        default=None,
        description="Source vertices switched before the map becomes edge-colour preserving",
    )
    edge_map: dict[str, str] | None = Field(
        default=None,
        description="Source edge label -> target edge label; only when the target has digons",
    )

    def image(self, vertex: str) -> str:
        return self.mapping[vertex]

    @property
    def image_set(self) -> set[str]:
        return set(self.mapping.values())

    def to_lines(self) -> list[str]:
        """Witness as 'map u->a ...' and 'switch v ...' lines."""
        lines = ["map " + " ".join(f"{u}->{a}" for u, a in self.mapping.items())]
        if self.switch_set is not None:
            lines.append(" ".join(["switch", *self.switch_set]))
        if self.edge_map:
            lines.extend(f"edge {src} => {dst}" for src, dst in self.edge_map.items())
        return lines


class CertificateKind(str, Enum):
    CUT = "cut"
    CYCLE = "cycle"


class EquivCertificate(BaseModel):
    """
    Certificate for a switching-equivalence question.

    A cut certificate names the switch set X; a cycle certificate names a closed
    walk (listed without repeating its first vertex) whose sign differs between
    the two signatures. `cycle_signs` names the edge used at each step when the
    walk runs through a digon.
    """

    model_config = ConfigDict(frozen=True)

    kind: CertificateKind
    switch_set: tuple[str, ...] = ()
    cycle: tuple[str, ...] = ()
    cycle_signs: tuple[Sign, ...] | None = None

    @classmethod
    def cut(cls, switch_set: tuple[str, ...]) -> "EquivCertificate":
        return cls(kind=CertificateKind.CUT, switch_set=tuple(switch_set))

    @classmethod
    def from_cycle(
        cls, cycle: tuple[str, ...], signs: tuple[Sign, ...] | None = None
    ) -> "EquivCertificate":
        return cls(kind=CertificateKind.CYCLE, cycle=tuple(cycle), cycle_signs=signs)

    @property
    def is_cut(self) -> bool:
        return self.kind is CertificateKind.CUT

    def walk(self) -> list[str]:
        """The cycle as a closed walk (first vertex repeated at the end)."""
        return [*self.cycle, self.cycle[0]] if self.cycle else []

    def to_text(self) -> str:
        items = self.switch_set if self.is_cut else self.cycle
        return " ".join([self.kind.value, *items])


class ColouringWitness(BaseModel):
    """A proper Zaslavsky k-colouring: phi(u) * sigma(e) != phi(v) on every edge."""

    model_config = ConfigDict(frozen=True)

    k: int
    zero_free: bool
    colours: dict[str, int]

    def to_lines(self) -> list[str]:
        return ["colour " + " ".join(f"{v}={c:+d}" if c else f"{v}=0"
                                     for v, c in self.colours.items())]
