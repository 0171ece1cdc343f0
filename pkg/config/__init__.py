"""Configuration module."""

from config.settings import (
    CorpusConfig,
    Limits,
    OracleSettings,
    get_corpus_config,
    get_oracle_settings,
)

__all__ = [
    "CorpusConfig",
    "Limits",
    "OracleSettings",
    "get_corpus_config",
    "get_oracle_settings",
]
