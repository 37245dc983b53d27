"""
Runtime settings for the enumeration and oracle code paths.

Settings are always built explicitly (the CLI turns its flags into a
Settings instance); nothing is read from the environment.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ORACLE_BOUND = 64
DEFAULT_WORKERS = 1
DEFAULT_CHUNK_SIZE = 1 << 16
DEFAULT_EXHAUSTIVE_LIMIT = 48


class Settings(BaseModel):
    """Validated knobs shared by the CLI and the scripts."""

    model_config = ConfigDict(frozen=True)

    oracle_bound: int = Field(
        DEFAULT_ORACLE_BOUND,
        ge=1,
        description="Largest order n for which the materialized elimination determinant runs",
    )
    workers: int = Field(
        DEFAULT_WORKERS,
        ge=1,
        description="Worker processes for enumerations (1 runs in-process)",
    )
    chunk_size: int = Field(
        DEFAULT_CHUNK_SIZE,
        ge=1,
        description="Rows per vectorized batch in sampling",
    )
    exhaustive_limit: int = Field(
        DEFAULT_EXHAUSTIVE_LIMIT,
        ge=1,
        description="Largest n accepted by the meet-in-the-middle exhaustive census",
    )
