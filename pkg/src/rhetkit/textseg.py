"""Sentence splitting, whitespace tokenization, and unigram POS tagging.

The segmentation rules are deliberately simple: a sentence ends at '.', '!'
or '?' followed by whitespace (or end of input), and words are whitespace
chunks with leading/trailing punctuation peeled off into their own tokens.
Abbreviation handling is omitted on purpose; for speeches and prose the
error rate is tolerable and the behavior stays predictable.

Tagging is a plain unigram lookup: every word gets the single tag stored
for its lowercased surface, unknown words fall back to NOUN, punctuation
tokens are always PUNCT.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import LexiconError

# The 12-tag universal tagset.
UNIVERSAL_TAGS = (
    "NOUN",
    "VERB",
    "ADJ",
    "ADV",
    "PRON",
    "DET",
    "ADP",
    "NUM",
    "CONJ",
    "PRT",
    "PUNCT",
    "X",
)

UNKNOWN_WORD_TAG = "NOUN"

_TERMINALS = ".!?"


@dataclass(frozen=True)
class Token:
    """A word or punctuation token with its offset into the source text."""

    surface: str
    is_word: bool
    char_offset: int


@dataclass(frozen=True)
class Sentence:
    """A tokenized sentence and its position in the document."""

    tokens: tuple[Token, ...]
    index: int
    text: str

    def words(self) -> tuple[Token, ...]:
        """Word tokens only, in order (punctuation skipped)."""
        return tuple(t for t in self.tokens if t.is_word)


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str


class TagLexicon:
    """Immutable word -> most-frequent-tag table over the universal tagset.

    File format: UTF-8, one ``word<TAB>tag`` entry per line, words stored
    lowercased. When a word appears twice the first occurrence wins.
    """

    def __init__(self, entries: dict[str, str]):
        self._entries = dict(entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def get(self, word: str) -> str | None:
        """Stored tag for a word (case-insensitive), or None."""
        return self._entries.get(word.lower())

    @classmethod
    def load(cls, path: str | Path) -> "TagLexicon":
        entries: dict[str, str] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or not parts[0]:
                    raise LexiconError(
                        f"{path}:{lineno}: expected 'word<TAB>tag', got {line!r}"
                    )
                word, tag_name = parts
                if tag_name not in UNIVERSAL_TAGS:
                    raise LexiconError(f"{path}:{lineno}: unknown tag {tag_name!r}")
                entries.setdefault(word.lower(), tag_name)
        return cls(entries)


def tokenize(text: str, base_offset: int = 0) -> list[Token]:
    """Split ``text`` into word and punctuation tokens.

    Splits on whitespace; leading and trailing punctuation characters of
    each chunk become one-character punctuation tokens. Internal hyphens
    and apostrophes stay inside the word ("don't", "warm-blooded").
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace():
            j += 1
        _chunk_tokens(text, i, j, base_offset, tokens)
        i = j
    return tokens


def _chunk_tokens(text: str, start: int, end: int, base: int, out: list[Token]) -> None:
    left = start
    while left < end and not text[left].isalnum():
        out.append(Token(text[left], False, base + left))
        left += 1
    if left == end:
        return
    right = end
    while right > left and not text[right - 1].isalnum():
        right -= 1
    out.append(Token(text[left:right], True, base + left))
    for k in range(right, end):
        out.append(Token(text[k], False, base + k))


def split_sentences(text: str) -> list[Sentence]:
    """Split text into sentences at '.', '!' or '?' + whitespace/end."""
    sentences: list[Sentence] = []
    start = 0
    n = len(text)
    for i in range(n):
        if text[i] in _TERMINALS and (i + 1 == n or text[i + 1].isspace()):
            _append_sentence(text, start, i + 1, sentences)
            start = i + 1
    if start < n:
        _append_sentence(text, start, n, sentences)
    return sentences


def _append_sentence(text: str, start: int, end: int, sentences: list[Sentence]) -> None:
    segment = text[start:end]
    tokens = tokenize(segment, base_offset=start)
    if tokens:
        sentences.append(
            Sentence(tokens=tuple(tokens), index=len(sentences), text=segment.strip())
        )


def tag(tokens: list[Token], lexicon: TagLexicon) -> list[TaggedToken]:
    """Tag every token: lexicon lookup for words, PUNCT for punctuation."""
    tagged: list[TaggedToken] = []
    for tok in tokens:
        if not tok.is_word:
            tagged.append(TaggedToken(tok, "PUNCT"))
        else:
            tagged.append(TaggedToken(tok, lexicon.get(tok.surface) or UNKNOWN_WORD_TAG))
    return tagged
