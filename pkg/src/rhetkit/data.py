"""Access to the bundled lexicons, fixtures, and corpus files."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

from .gloss import GlossLexicon, load_lexicon
from .textseg import TagLexicon


def data_path(*parts: str) -> Path:
    """Absolute path of a bundled data file."""
    root = resources.files("rhetkit") / "data"
    path = root.joinpath(*parts)
    return Path(str(path))


def fixture_path(*parts: str) -> Path:
    return data_path("fixtures", *parts)


def corpus_path(*parts: str) -> Path:
    return data_path("corpus", *parts)


@lru_cache(maxsize=None)
def default_tag_lexicon() -> TagLexicon:
    return TagLexicon.load(data_path("tags.tsv"))


@lru_cache(maxsize=None)
def default_gloss_lexicon() -> GlossLexicon:
    return load_lexicon(data_path("glosses.tsv"))
