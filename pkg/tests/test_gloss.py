import logging

import pytest

from rhetkit.errors import LexiconError
from rhetkit.gloss import gloss_of, load_lexicon, save_lexicon


BIRD_LINE = (
    "bird\twarm-blooded egg-laying vertebrate characterized by feathers "
    "and forelimbs modified as wings\n"
)


class TestLoadLexicon:
    def test_gloss_is_tokenized(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text(BIRD_LINE, encoding="utf-8")
        lex = load_lexicon(path)
        assert gloss_of(lex, "bird") == (
            "warm-blooded", "egg-laying", "vertebrate", "characterized", "by",
            "feathers", "and", "forelimbs", "modified", "as", "wings",
        )

    def test_punctuation_stripped_from_gloss(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("x\ta thing, or so; maybe.\n", encoding="utf-8")
        lex = load_lexicon(path)
        assert gloss_of(lex, "x") == ("a", "thing", "or", "so", "maybe")

    def test_duplicate_lemma_first_wins(self, tmp_path, caplog):
        path = tmp_path / "g.tsv"
        path.write_text("w\tfirst sense\nw\tsecond sense\n", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            lex = load_lexicon(path)
        assert gloss_of(lex, "w") == ("first", "sense")
        assert "duplicate" in caplog.text

    def test_empty_gloss_skipped_with_warning(self, tmp_path, caplog):
        path = tmp_path / "g.tsv"
        path.write_text("w\t...\nv\treal words\n", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            lex = load_lexicon(path)
        assert gloss_of(lex, "w") is None
        assert len(lex) == 1
        assert "skipped" in caplog.text

    def test_malformed_line_reports_lineno(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("good\tgloss here\nno tab on this line\n", encoding="utf-8")
        with pytest.raises(LexiconError, match="2"):
            load_lexicon(path)

    def test_empty_file_gives_empty_lexicon(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("", encoding="utf-8")
        assert len(load_lexicon(path)) == 0


class TestGlossOf:
    def test_case_insensitive(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("word\tsome tokens\n", encoding="utf-8")
        lex = load_lexicon(path)
        assert gloss_of(lex, "WORD") == gloss_of(lex, "word") == ("some", "tokens")

    def test_absent_word(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("word\tsome tokens\n", encoding="utf-8")
        assert gloss_of(load_lexicon(path), "other") is None

    def test_never_returns_empty(self, gloss_lexicon):
        for lemma in gloss_lexicon.lemmas():
            assert len(gloss_lexicon.gloss(lemma)) >= 1


class TestBundledLexicon:
    def test_seed_words_present(self, gloss_lexicon):
        for word in ("bird", "generalization", "hand", "hasty", "indeed", "passion"):
            assert gloss_of(gloss_lexicon, word) is not None

    def test_transitively_closed(self, gloss_lexicon):
        # no chain can ever dead-end: every gloss token has its own entry
        missing = set()
        for lemma in gloss_lexicon.lemmas():
            for token in gloss_lexicon.gloss(lemma):
                if token.lower() not in gloss_lexicon:
                    missing.add(token)
        assert not missing

    def test_reserialization_round_trip(self, gloss_lexicon, tmp_path):
        path = tmp_path / "again.tsv"
        save_lexicon(gloss_lexicon, path)
        reloaded = load_lexicon(path)
        assert set(reloaded.lemmas()) == set(gloss_lexicon.lemmas())
        for lemma in gloss_lexicon.lemmas():
            assert reloaded.gloss(lemma) == gloss_lexicon.gloss(lemma)
