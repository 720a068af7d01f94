"""
Configuration settings for the library.
Loads INDSUB_* environment variables (and .env) and provides type-safe caps.
"""

import os
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Hard limits of the modules. Settings may lower a cap but never exceed these.
HARD_MAX_VERTICES = 64
HARD_MAX_EDGES_NAIVE = 64
HARD_MAX_ORBITS = 30
HARD_MAX_TW_N = 16
HARD_MAX_ISO_N = 12
HARD_MAX_BICLIQUE_N = 24
HARD_MAX_MONOTONE_N = 7


class IndsubSettings(BaseSettings):
    """Run-time caps and logging options loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="INDSUB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = Field(default="INFO", description="Logging level for loguru")

    # Desk-scale caps
    max_edges_naive: int = Field(
        default=25, description="Edge cap of the naive alternating-enumerator engine"
    )
    max_orbits: int = Field(default=20, description="Orbit cap for fixed-point enumeration")
    max_tw_n: int = Field(default=11, description="Vertex cap for exact treewidth")
    max_iso_n: int = Field(default=10, description="Vertex cap for the isomorphism checker")
    max_biclique_n: int = Field(
        default=16, description="Vertex cap for brute-force biclique search"
    )
    monotone_check_n: int = Field(
        default=6, description="Graph size up to which edge-monotonicity is verified"
    )
    max_subsets: int = Field(
        default=10**8, description="Cap on enumerated vertex subsets or transversals"
    )
    memo_size: int = Field(default=65536, description="LRU size of property memo caches")

    # Parallelism
    max_threads: Optional[int] = Field(
        default=None, description="Worker process cap (INDSUB_MAX_THREADS); default: CPU count"
    )

    @field_validator("max_edges_naive")
    @classmethod
    def _check_naive_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_EDGES_NAIVE, "max_edges_naive")

    @field_validator("max_orbits")
    @classmethod
    def _check_orbit_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_ORBITS, "max_orbits")

    @field_validator("max_tw_n")
    @classmethod
    def _check_tw_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_TW_N, "max_tw_n")

    @field_validator("max_iso_n")
    @classmethod
    def _check_iso_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_ISO_N, "max_iso_n")

    @field_validator("max_biclique_n")
    @classmethod
    def _check_biclique_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_BICLIQUE_N, "max_biclique_n")

    @field_validator("monotone_check_n")
    @classmethod
    def _check_monotone_cap(cls, value: int) -> int:
        return _within(value, HARD_MAX_MONOTONE_N, "monotone_check_n")

    @property
    def worker_count(self) -> int:
        """Effective number of worker processes."""
        return max(1, self.max_threads or os.cpu_count() or 1)


def _within(value: int, limit: int, name: str) -> int:
    if value < 0 or value > limit:
        raise ValueError(f"{name}={value} outside the hard limit 0..{limit}")
    return value


# Global settings instance
settings = IndsubSettings()
