"""The gloss lexicon: word -> definition tokens, for chain generation.

Entries map a lowercased lemma to its definition text, stored as a
sequence of word tokens with punctuation stripped. Lookup is
case-insensitive and absence is a value, not an error.
"""

from __future__ import annotations

import logging
from pathlib import Path

from .errors import LexiconError
from .textseg import tokenize

log = logging.getLogger(__name__)


class GlossLexicon:
    """Immutable lemma -> gloss-token-sequence mapping."""

    def __init__(self, entries: dict[str, tuple[str, ...]]):
        self._entries = dict(entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def lemmas(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def gloss(self, word: str) -> tuple[str, ...] | None:
        return self._entries.get(word.lower())


def load_lexicon(path: str | Path) -> GlossLexicon:
    """Load a ``lemma<TAB>gloss text`` TSV into a GlossLexicon.

    Gloss text is tokenized and punctuation tokens are dropped. Entries
    whose gloss tokenizes to nothing are skipped with a warning, as are
    duplicate lemmas (first occurrence wins).
    """
    entries: dict[str, tuple[str, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0]:
                raise LexiconError(
                    f"{path}:{lineno}: expected 'lemma<TAB>gloss', got {line!r}"
                )
            lemma = parts[0].lower()
            gloss_tokens = tuple(
                t.surface for t in tokenize(parts[1]) if t.is_word
            )
            if not gloss_tokens:
                log.warning("%s:%d: empty gloss for %r, entry skipped", path, lineno, lemma)
                continue
            if lemma in entries:
                log.warning("%s:%d: duplicate lemma %r, first occurrence kept", path, lineno, lemma)
                continue
            entries[lemma] = gloss_tokens
    return GlossLexicon(entries)


def gloss_of(lexicon: GlossLexicon, word: str) -> tuple[str, ...] | None:
    """The stored gloss tokens for a word (case-insensitive), or None."""
    return lexicon.gloss(word)


def save_lexicon(lexicon: GlossLexicon, path: str | Path) -> None:
    """Serialize a lexicon back to the TSV format load_lexicon reads."""
    lines = [
        f"{lemma}\t{' '.join(gloss)}"
        for lemma, gloss in sorted(
            (lemma, lexicon.gloss(lemma)) for lemma in lexicon.lemmas()
        )
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
