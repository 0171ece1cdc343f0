"""
Configuration settings for sighom.

Oracle size bounds are the only values read from the environment (via
pydantic-settings); corpus parameters are fixed defaults so that property
tests are reproducible.
"""

from functools import lru_cache

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class OracleSettings(BaseSettings):
    """Size bounds for the brute-force oracles."""

    model_config = SettingsConfigDict(
        env_prefix="SIGHOM_ORACLE_",
        case_sensitive=False,
        extra="ignore",
    )

    max_source_vertices: int = Field(
        default=8,
        description="Largest source graph accepted by the s-homomorphism oracles",
    )
    max_target_vertices: int = Field(
        default=6,
        description="Largest target graph accepted by the s-homomorphism oracles",
    )
    max_equivalence_vertices: int = Field(
        default=12,
        description="Largest graph accepted by the switch-set enumeration",
    )
    max_cycle_vertices: int = Field(
        default=10,
        description="Largest graph accepted by the simple-cycle enumeration",
    )


class CorpusConfig(BaseModel):
    """Parameters of the generated property-test corpus."""

    seed: int = 1729

    # Exhaustive part (up to isomorphism)
    exhaustive_max_vertices: int = 4

    # Seeded random graphs
    random_count: int = 200
    random_min_vertices: int = 5
    random_max_vertices: int = 8
    edge_probability: float = 0.45
    loop_probability: float = 0.15
    digon_probability: float = 0.15

    # (g, h) instance pairs
    pair_count: int = 500
    pair_source_max: int = 6
    pair_target_max: int = 4

    # Polynomial-case and colouring sweeps
    poly_instance_count: int = 300
    poly_instance_max: int = 7
    colour_max_vertices: int = 5


class Limits:
    """Named constants shared by the parsers and constructions."""

    # SGF glyphs
    POSITIVE_GLYPH = "+"
    NEGATIVE_GLYPH = "-"
    COMMENT_PREFIX = "#"

    # Constructed vertex names: "u.0"/"u.1" in switching graphs, "P3.v2" in gadgets
    COPY_SEPARATOR = "."
    GADGET_VERTEX_PREFIX = "v"

    # Default indicator endpoints
    INDICATOR_I = "i"
    INDICATOR_J = "j"


@lru_cache
def get_oracle_settings() -> OracleSettings:
    """Get cached oracle settings instance."""
    return OracleSettings()


@lru_cache
def get_corpus_config() -> CorpusConfig:
    """Get cached corpus configuration."""
    return CorpusConfig()
