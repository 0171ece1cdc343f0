"""Exceptions raised by the graph constructions."""


class ConstructionError(Exception):
    """Base exception for invalid construction inputs."""

    pass


class NoSwapAutomorphism(ConstructionError):
    """The indicator has no ec-automorphism exchanging its two endpoints."""

    pass


class ParityError(ConstructionError):
    """A gadget length parameter has the wrong parity or is too small."""

    pass


class IndexOutOfRange(ConstructionError):
    """A gadget index lies outside 1..length-2."""

    pass


class InvalidRunWord(ConstructionError):
    """Runs do not alternate in sign or have non-positive length."""

    pass


class NotBipartite(ConstructionError):
    """A reduction input is not a loop-free bipartite graph."""

    pass


class DisconnectedInput(ConstructionError):
    """A reduction input is not connected."""

    pass


class EmbeddingMismatch(ConstructionError):
    """The instance does not contain the target graph with a compatible bipartition."""

    pass
