"""Extractive summarization by weighted strategy density.

Each sentence is scored as (n / 6) * sum over strategies of weight times
the strategy's share of the sentence's n detected instances. Strategies
that span sentence boundaries (anaphora, epistrophe) credit a sentence
whenever it participates in a qualifying run with a neighbor.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import EmptyDocumentError, LexiconError
from .finders import (
    STRATEGIES,
    StrategyKind,
    count_alliteration,
    count_dashes,
    count_parallelism,
    count_semicolons,
)
from .textseg import Sentence, TagLexicon, split_sentences

_NUM_STRATEGIES = len(STRATEGIES)

DEFAULT_WEIGHTS: dict[StrategyKind, float] = {
    StrategyKind.DASH: 0.05,
    StrategyKind.SEMICOLON: 0.05,
    StrategyKind.ALLITERATION: 0.1,
    StrategyKind.ANAPHORA: 0.2,
    StrategyKind.EPISTROPHE: 0.2,
    StrategyKind.PARALLELISM: 0.4,
}


@dataclass(frozen=True)
class SentenceScore:
    sentence_index: int
    n_strategies: int
    p_given_sentence: dict[StrategyKind, float]
    score: float


def load_weights(path: str | Path) -> dict[StrategyKind, float]:
    """Read a ``strategy<TAB>weight`` TSV overriding the default table."""
    weights = dict(DEFAULT_WEIGHTS)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(
                    f"{path}:{lineno}: expected 'strategy<TAB>weight', got {line!r}"
                )
            try:
                kind = StrategyKind.from_name(parts[0])
                weights[kind] = float(parts[1])
            except ValueError as exc:
                raise LexiconError(f"{path}:{lineno}: {exc}") from None
    return weights


def _first_word(sentence: Sentence) -> str | None:
    words = sentence.words()
    return words[0].surface.lower() if words else None


def _last_word(sentence: Sentence) -> str | None:
    words = sentence.words()
    return words[-1].surface.lower() if words else None


def _sentence_counts(
    sentence: Sentence,
    prev: Sentence | None,
    nxt: Sentence | None,
    lexicon: TagLexicon,
) -> dict[StrategyKind, int]:
    first = _first_word(sentence)
    last = _last_word(sentence)
    in_anaphora_run = first is not None and (
        (prev is not None and _first_word(prev) == first)
        or (nxt is not None and _first_word(nxt) == first)
    )
    in_epistrophe_run = last is not None and (
        (prev is not None and _last_word(prev) == last)
        or (nxt is not None and _last_word(nxt) == last)
    )
    return {
        StrategyKind.DASH: count_dashes(sentence.text),
        StrategyKind.SEMICOLON: count_semicolons(sentence.text),
        StrategyKind.ALLITERATION: count_alliteration([sentence]),
        StrategyKind.ANAPHORA: 1 if in_anaphora_run else 0,
        StrategyKind.EPISTROPHE: 1 if in_epistrophe_run else 0,
        StrategyKind.PARALLELISM: count_parallelism([sentence], lexicon),
    }


def score_sentence(
    sentence: Sentence,
    prev: Sentence | None,
    nxt: Sentence | None,
    weights: Mapping[StrategyKind, float],
    lexicon: TagLexicon,
) -> SentenceScore:
    """Score one sentence given its document neighbors."""
    counts = _sentence_counts(sentence, prev, nxt, lexicon)
    n = sum(counts.values())
    if n == 0:
        p = {kind: 0.0 for kind in STRATEGIES}
        score = 0.0
    else:
        p = {kind: counts[kind] / n for kind in STRATEGIES}
        score = (n / _NUM_STRATEGIES) * sum(weights[k] * p[k] for k in STRATEGIES)
    return SentenceScore(
        sentence_index=sentence.index,
        n_strategies=n,
        p_given_sentence=p,
        score=score,
    )


def score_document(
    document: str,
    weights: Mapping[StrategyKind, float] | None = None,
    lexicon: TagLexicon | None = None,
) -> list[SentenceScore]:
    """Score every sentence of a document in order."""
    from .data import default_tag_lexicon

    weights = DEFAULT_WEIGHTS if weights is None else weights
    lexicon = default_tag_lexicon() if lexicon is None else lexicon
    sentences = split_sentences(document)
    if not sentences:
        raise EmptyDocumentError("document contains no sentences")
    scores = []
    for i, sentence in enumerate(sentences):
        prev = sentences[i - 1] if i > 0 else None
        nxt = sentences[i + 1] if i + 1 < len(sentences) else None
        scores.append(score_sentence(sentence, prev, nxt, weights, lexicon))
    return scores


def summarize(
    document: str,
    k: int = 4,
    weights: Mapping[StrategyKind, float] | None = None,
    lexicon: TagLexicon | None = None,
) -> list[tuple[str, float]]:
    """Top-k sentences by score, returned in document order.

    Ties are broken in favor of the earlier sentence. k larger than the
    sentence count returns every sentence.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    scores = score_document(document, weights, lexicon)
    sentences = split_sentences(document)
    top = sorted(scores, key=lambda s: (-s.score, s.sentence_index))[:k]
    chosen = sorted(s.sentence_index for s in top)
    return [(sentences[i].text, scores[i].score) for i in chosen]
