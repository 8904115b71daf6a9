"""Gloss-chain text generation with targeted punctuation injection.

Starting from a seed word, each next word is drawn from the gloss of the
current word: the middle token in deterministic mode, a uniformly random
token in random mode. The chain runs until the word budget (words per
sentence times number of sentences) is spent, the words are partitioned
into sentences, and dashes/semicolons are injected into randomly chosen
sentences so that the measured counts hit the requested percentages
exactly.

All randomness comes from a private generator seeded from the spec, so a
given spec and lexicon always produce byte-identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import GenerationError
from .finders import StrategyKind
from .gloss import GlossLexicon, gloss_of


class GenerationMode(Enum):
    DETERMINISTIC = "deterministic"
    RANDOM = "random"


class LengthDistribution(Enum):
    FIXED = "fixed"
    JITTERED = "jittered"


@dataclass(frozen=True)
class GenerationSpec:
    """Everything a generation run needs, including its RNG seed."""

    seed_word: str
    words_per_sentence: int
    num_sentences: int
    dash_percent: float = 0.0
    semicolon_percent: float = 0.0
    mode: GenerationMode = GenerationMode.DETERMINISTIC
    rng_seed: int = 0
    length_distribution: LengthDistribution = LengthDistribution.FIXED

    def __post_init__(self) -> None:
        if self.words_per_sentence < 1:
            raise ValueError("words_per_sentence must be >= 1")
        if self.num_sentences < 1:
            raise ValueError("num_sentences must be >= 1")
        for name in ("dash_percent", "semicolon_percent"):
            value = getattr(self, name)
            if not 0.0 <= value <= 100.0:
                raise ValueError(f"{name} must be in [0, 100]")

    @property
    def total_words(self) -> int:
        return self.words_per_sentence * self.num_sentences

    @property
    def target_p(self) -> dict[StrategyKind, float]:
        return {
            StrategyKind.DASH: self.dash_percent,
            StrategyKind.SEMICOLON: self.semicolon_percent,
        }


@dataclass(frozen=True)
class PunctuationInsertion:
    """One injected mark: which sentence, which strategy, which boundary."""

    sentence_index: int
    strategy: StrategyKind
    position: int


@dataclass(frozen=True)
class GeneratedText:
    sentences: tuple[str, ...]
    total_words: int
    injection_log: tuple[PunctuationInsertion, ...]
    fallbacks: tuple[tuple[int, str], ...] = ()

    @property
    def text(self) -> str:
        return " ".join(self.sentences)


def next_word(
    current: str,
    lexicon: GlossLexicon,
    mode: GenerationMode,
    rng: random.Random,
) -> str:
    """The next chain word drawn from the gloss of ``current``.

    Deterministic mode takes the token at floor(len/2); random mode picks
    uniformly with the supplied rng. Raises GenerationError when the word
    has no gloss.
    """
    gloss = gloss_of(lexicon, current)
    if gloss is None:
        raise GenerationError(f"word {current!r} has no gloss")
    if mode is GenerationMode.DETERMINISTIC:
        return gloss[len(gloss) // 2]
    return gloss[rng.randrange(len(gloss))]


def generate(spec: GenerationSpec, lexicon: GlossLexicon) -> GeneratedText:
    """Run the full pipeline: chain words, partition, inject, render."""
    if gloss_of(lexicon, spec.seed_word) is None:
        raise GenerationError("seed word has no gloss")
    rng = random.Random(spec.rng_seed)

    words = [spec.seed_word]
    fallbacks: list[tuple[int, str]] = []
    current = spec.seed_word
    while len(words) < spec.total_words:
        try:
            nxt = next_word(current, lexicon, spec.mode, rng)
        except GenerationError:
            # Dead end: restart the chain from the seed word and log it.
            fallbacks.append((len(words), current))
            nxt = next_word(spec.seed_word, lexicon, spec.mode, rng)
        words.append(nxt)
        current = nxt

    lengths = _sentence_lengths(spec, rng)
    sentences: list[list[str]] = []
    cursor = 0
    for length in lengths:
        sentences.append(words[cursor : cursor + length])
        cursor += length

    injected, log = inject_punctuation(sentences, spec.target_p, rng)
    rendered = tuple(_render_sentence(s) for s in injected)
    return GeneratedText(
        sentences=rendered,
        total_words=spec.total_words,
        injection_log=tuple(log),
        fallbacks=tuple(fallbacks),
    )


def _sentence_lengths(spec: GenerationSpec, rng: random.Random) -> list[int]:
    if spec.length_distribution is LengthDistribution.FIXED:
        return [spec.words_per_sentence] * spec.num_sentences
    low = max(1, spec.words_per_sentence - 2)
    high = spec.words_per_sentence + 2
    lengths = [rng.randint(low, high) for _ in range(spec.num_sentences)]
    # Rebalance cyclically so the word budget is exact; lengths stay >= 1.
    diff = spec.total_words - sum(lengths)
    i = 0
    while diff != 0:
        if diff > 0:
            lengths[i % len(lengths)] += 1
            diff -= 1
        elif lengths[i % len(lengths)] > 1:
            lengths[i % len(lengths)] -= 1
            diff += 1
        i += 1
    return lengths


def inject_punctuation(
    sentences: Sequence[Sequence[str]],
    target_p: Mapping[StrategyKind, float],
    rng: random.Random,
) -> tuple[list[list[str]], list[PunctuationInsertion]]:
    """Inject dashes and semicolons to hit the target percentages.

    For each strategy, round(percent/100 * num_sentences) sentences are
    chosen uniformly without replacement; within each chosen sentence the
    mark goes at one uniformly chosen inter-word boundary. A dash becomes
    a standalone "-" between words, a semicolon is appended to the word
    before the boundary. A sentence may receive both marks.
    """
    result = [list(s) for s in sentences]
    log: list[PunctuationInsertion] = []
    dashes: dict[int, int] = {}
    semis: dict[int, int] = {}
    for kind, slots in ((StrategyKind.DASH, dashes), (StrategyKind.SEMICOLON, semis)):
        percent = target_p.get(kind, 0.0)
        if not 0.0 <= percent <= 100.0:
            raise ValueError(f"{kind.value} percent must be in [0, 100]")
        k = int(percent / 100.0 * len(result) + 0.5)
        for index in sorted(rng.sample(range(len(result)), k)):
            boundary = rng.randint(1, max(1, len(result[index]) - 1))
            slots[index] = boundary
            log.append(PunctuationInsertion(index, kind, boundary))
    for index, boundary in semis.items():
        words = result[index]
        words[min(boundary, len(words)) - 1] += ";"
    for index, boundary in dashes.items():
        words = result[index]
        words.insert(min(boundary, len(words) + 1), "-")
    return result, log


def _render_sentence(words: Sequence[str]) -> str:
    body = " ".join(words)
    body = body[0].upper() + body[1:]
    if body.endswith("-"):
        return body + " ."
    return body + "."


def markov_step_probability(chain: Sequence[str], lexicon: GlossLexicon) -> float:
    """Probability of the final word of a random-mode chain.

    The seed has probability 1; every following word divides by the size
    of the previous word's gloss. Raises GenerationError when a link has
    no gloss.
    """
    if not chain:
        raise ValueError("chain must contain at least the seed word")
    p = 1.0
    for prev in chain[:-1]:
        gloss = gloss_of(lexicon, prev)
        if gloss is None:
            raise GenerationError(f"broken chain link: {prev!r} has no gloss")
        p /= len(gloss)
    return p
