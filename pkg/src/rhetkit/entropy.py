"""Shannon entropy of a text's word distribution.

Relative entropy divides the measured entropy by the maximum possible
for the text's own vocabulary, log2 of the number of distinct words, so
it always lands in [0, 1].
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .errors import EmptyDocumentError
from .textseg import tokenize

_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntropyReport:
    total_words: int
    distinct_words: int
    entropy_bits: float
    max_entropy_bits: float
    relative_entropy: float


def word_distribution(text: str) -> dict[str, float]:
    """Case-folded word probabilities; punctuation tokens are excluded."""
    words = [t.surface.lower() for t in tokenize(text) if t.is_word]
    if not words:
        return {}
    counts = Counter(words)
    total = len(words)
    return {word: count / total for word, count in counts.items()}


def shannon_entropy(dist: Mapping[str, float]) -> float:
    """H = -sum(p * log2 p); empty distribution yields 0."""
    if not dist:
        return 0.0
    for word, p in dist.items():
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability for {word!r} outside [0, 1]: {p}")
    total = math.fsum(dist.values())
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise ValueError(f"probabilities sum to {total}, not 1")
    return -math.fsum(p * math.log2(p) for p in dist.values() if p > 0.0)


def relative_entropy(entropy_bits: float, distinct_words: int) -> float:
    """Entropy over log2(distinct words); 0 by convention for one word."""
    if distinct_words < 1:
        raise ValueError("distinct_words must be >= 1")
    if distinct_words == 1:
        return 0.0
    return entropy_bits / math.log2(distinct_words)


def analyze(text: str) -> EntropyReport:
    """Full entropy report for a text; raises on word-free input."""
    words = [t.surface.lower() for t in tokenize(text) if t.is_word]
    if not words:
        raise EmptyDocumentError("no words")
    dist = word_distribution(text)
    h = shannon_entropy(dist)
    distinct = len(dist)
    h_max = math.log2(distinct) if distinct > 1 else 0.0
    return EntropyReport(
        total_words=len(words),
        distinct_words=distinct,
        entropy_bits=h,
        max_entropy_bits=h_max,
        relative_entropy=relative_entropy(h, distinct),
    )
