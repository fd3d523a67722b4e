"""Tokenization and word-cloud term frequencies over the filtered record set.

Counting is record-level: a term appearing five times in one record still
contributes 1. Frequencies honor the engine's self-exclusion rule, so an
active term filter does not shrink its own cloud.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import NoTextDimension

_TOKEN_SPLIT = re.compile(r"[^a-z0-9-]+")


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    """The shipped English stopword list (one term per line)."""
    text = resources.files("crossmap.data").joinpath("stopwords_en.txt").read_text("utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def tokenize(text: str) -> list[str]:
    """Lowercase terms of [a-z0-9-], length >= 2, stopwords removed.

    Duplicates are kept; per-record deduplication happens at index build.
    """
    stop = stopwords()
    tokens = _TOKEN_SPLIT.split(text.lower())
    return [t for t in tokens if len(t) > 1 and t not in stop]


@dataclass(frozen=True)
class TermCount:
    term: str
    frequency: int


def term_counts(engine, k: int, dimension: str | None = None) -> list[TermCount]:
    """Top-k terms over records passing all filters except the text dimension's own.

    Ordered by descending frequency, ties by ascending term; zero-frequency
    terms are never listed.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if dimension is None:
        dimension = engine.first_dimension_of_kind("text_term")
        if dimension is None:
            raise NoTextDimension("engine has no text_term dimension")
    result = engine.top_k(dimension, k)
    return [TermCount(term=b.key, frequency=int(b.value)) for b in result.bins if b.value > 0]
