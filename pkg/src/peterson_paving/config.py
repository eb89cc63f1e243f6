"""Tunable limits and seeds, gathered in one place."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Limits:
    max_weyl_order: int = 1_000_000
    max_reduced_words: int = 200_000
    max_naive_word: int = 16
    max_oracle_roots: int = 36


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 20240611
    numerator_range: int = 97
    denominator_range: int = 13


LIMITS = Limits()
CACHE_ENV = "PETERSON_PAVING_CACHE"
SCHEMA_VERSION = 1


def cache_dir() -> Path | None:
    """Directory for structure-constant caches, if configured."""
    val = os.environ.get(CACHE_ENV)
    return Path(val) if val else None
