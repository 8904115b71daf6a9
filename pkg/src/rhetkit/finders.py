"""Finders for the six counted rhetorical strategies.

Each finder returns a non-negative instance count. Strategies that span
several words or sentences (alliteration, anaphora, epistrophe,
parallelism) are counted once per maximal run, never once per pair, so a
run of four alliterative words is one instance, not three.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .textseg import Sentence, TagLexicon, split_sentences, tag as tag_tokens


class StrategyKind(Enum):
    """The six counted strategies, in fixed column order."""

    DASH = "dash"
    SEMICOLON = "semicolon"
    ALLITERATION = "alliteration"
    ANAPHORA = "anaphora"
    EPISTROPHE = "epistrophe"
    PARALLELISM = "parallelism"

    @classmethod
    def from_name(cls, name: str) -> "StrategyKind":
        for kind in cls:
            if kind.value == name.lower():
                return kind
        raise ValueError(f"unknown strategy {name!r}")


STRATEGIES = tuple(StrategyKind)


@dataclass(frozen=True)
class StrategyCounts:
    """Integer tally per strategy for one text."""

    dash: int = 0
    semicolon: int = 0
    alliteration: int = 0
    anaphora: int = 0
    epistrophe: int = 0
    parallelism: int = 0

    def __post_init__(self) -> None:
        for kind in STRATEGIES:
            if self[kind] < 0:
                raise ValueError(f"negative count for {kind.value}")

    def __getitem__(self, kind: StrategyKind) -> int:
        return int(getattr(self, kind.value))

    def __add__(self, other: "StrategyCounts") -> "StrategyCounts":
        return StrategyCounts(*(self[k] + other[k] for k in STRATEGIES))

    @property
    def total(self) -> int:
        return sum(self[k] for k in STRATEGIES)

    def as_dict(self) -> dict[StrategyKind, int]:
        return {k: self[k] for k in STRATEGIES}

    @classmethod
    def from_mapping(cls, mapping: Mapping[StrategyKind, int]) -> "StrategyCounts":
        return cls(*(int(mapping.get(k, 0)) for k in STRATEGIES))


# Dash patterns: the spaced single hyphen plus the double hyphen and the
# em dash, which appear in the corpora this toolkit targets.
_EM_DASH = "—"


def count_dashes(text: str) -> int:
    """Count dash marks by a left-to-right scan.

    Matches " - ", "--" and the em dash; after a match the scan resumes
    at the character following the dash itself.
    """
    count = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] == _EM_DASH:
            count += 1
            i += 1
        elif text.startswith("--", i):
            count += 1
            i += 2
        elif text.startswith(" - ", i):
            count += 1
            i += 2  # resume at the trailing space, after the hyphen
        else:
            i += 1
    return count


def count_semicolons(text: str) -> int:
    """Number of ';' characters."""
    return text.count(";")


def _initial_letter(word: str) -> str | None:
    """First alphabetic character, lowercased.

    Words starting with a digit never participate in alliteration; words
    with no letters at all yield None.
    """
    if not word or word[0].isdigit():
        return None
    for ch in word:
        if ch.isalpha():
            return ch.lower()
    return None


def _maximal_runs(keys: list[str | None]) -> Iterator[int]:
    """Yield lengths of maximal runs of equal, non-None keys."""
    i = 0
    n = len(keys)
    while i < n:
        if keys[i] is None:
            i += 1
            continue
        j = i + 1
        while j < n and keys[j] == keys[i]:
            j += 1
        yield j - i
        i = j


def count_alliteration(sentences: Iterable[Sentence]) -> int:
    """Maximal runs of >= 2 consecutive words sharing the initial letter.

    Runs never cross a sentence boundary; punctuation tokens are
    transparent (the run is over the sentence's word tokens in order).
    """
    count = 0
    for sentence in sentences:
        letters = [_initial_letter(t.surface) for t in sentence.words()]
        count += sum(1 for length in _maximal_runs(letters) if length >= 2)
    return count


def _first_word(sentence: Sentence) -> str | None:
    words = sentence.words()
    return words[0].surface.lower() if words else None


def _last_word(sentence: Sentence) -> str | None:
    words = sentence.words()
    return words[-1].surface.lower() if words else None


def count_anaphora(sentences: Iterable[Sentence]) -> int:
    """Maximal runs of >= 2 consecutive sentences opening with one word.

    A run of sentences shares a non-empty common word prefix exactly when
    all of them begin with the same word (case-insensitive), so the run
    key is the first word token.
    """
    firsts = [_first_word(s) for s in sentences]
    return sum(1 for length in _maximal_runs(firsts) if length >= 2)


def count_epistrophe(sentences: Iterable[Sentence]) -> int:
    """Mirror of count_anaphora over sentence-final words."""
    lasts = [_last_word(s) for s in sentences]
    return sum(1 for length in _maximal_runs(lasts) if length >= 2)


def count_parallelism(sentences: Iterable[Sentence], lexicon: TagLexicon) -> int:
    """Count runs of adjacent same-size phrases with identical tag shapes.

    Per sentence, for phrase sizes 4 down to 1: the unconsumed word
    positions are chunked into adjacent non-overlapping n-grams and a
    maximal run of >= 2 adjacent grams with identical tag sequences
    counts once. Positions inside a counted run are consumed so smaller
    sizes cannot re-count them. Punctuation is excluded throughout.
    """
    count = 0
    for sentence in sentences:
        words = sentence.words()
        tags = [tt.tag for tt in tag_tokens(list(words), lexicon)]
        consumed = [False] * len(tags)
        for n in (4, 3, 2, 1):
            for segment in _unconsumed_segments(consumed):
                count += _count_gram_runs(tags, segment, n, consumed)
    return count


def _unconsumed_segments(consumed: list[bool]) -> list[list[int]]:
    segments: list[list[int]] = []
    current: list[int] = []
    for pos, used in enumerate(consumed):
        if used:
            if current:
                segments.append(current)
                current = []
        else:
            current.append(pos)
    if current:
        segments.append(current)
    return segments


def _count_gram_runs(
    tags: list[str], segment: list[int], n: int, consumed: list[bool]
) -> int:
    grams = [segment[i : i + n] for i in range(0, len(segment) - n + 1, n)]
    if len(grams) < 2:
        return 0
    shapes = [tuple(tags[p] for p in gram) for gram in grams]
    count = 0
    i = 0
    while i < len(grams):
        j = i + 1
        while j < len(grams) and shapes[j] == shapes[i]:
            j += 1
        if j - i >= 2:
            count += 1
            for gram in grams[i:j]:
                for pos in gram:
                    consumed[pos] = True
        i = j
    return count


def count_all(document: str, lexicon: TagLexicon) -> StrategyCounts:
    """Run all six finders on a document and combine the tallies."""
    sentences = split_sentences(document)
    return StrategyCounts(
        dash=count_dashes(document),
        semicolon=count_semicolons(document),
        alliteration=count_alliteration(sentences),
        anaphora=count_anaphora(sentences),
        epistrophe=count_epistrophe(sentences),
        parallelism=count_parallelism(sentences, lexicon),
    )
