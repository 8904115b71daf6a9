import random

import pytest

import oracles
from rhetkit.data import fixture_path
from rhetkit.finders import (
    STRATEGIES,
    StrategyCounts,
    StrategyKind,
    count_all,
    count_alliteration,
    count_anaphora,
    count_dashes,
    count_epistrophe,
    count_parallelism,
    count_semicolons,
)
from rhetkit.textseg import split_sentences, tag

N_ORACLE_SEQUENCES = 1000

WORD_POOL = [
    "sun", "sea", "stone", "big", "bad", "bird", "the", "a", "of", "by",
    "for", "people", "run", "fast", "jump", "high", "swim", "far", "42nd",
    "don't", "warm-blooded", "zzgloop", "zzgleep", "we", "act", "rest",
    "one", "quickly", "gold",
]

DASH_ALPHABET = list("ab -;.") + ["—", "\n", "--"]


def random_sentences(rng, max_sentences=5, max_words=6):
    parts = []
    for _ in range(rng.randint(1, max_sentences)):
        words = rng.choices(WORD_POOL, k=rng.randint(1, max_words))
        parts.append(" ".join(words) + rng.choice([".", "!", "?"]))
    return split_sentences(" ".join(parts))


def word_lists(sentences):
    return [[t.surface for t in s.words()] for s in sentences]


def tag_lists(sentences, lexicon):
    return [[tt.tag for tt in tag(list(s.words()), lexicon)] for s in sentences]


class TestDashes:
    def test_single_spaced_hyphen(self):
        assert count_dashes("a - b") == 1

    def test_no_dash(self):
        assert count_dashes("ab") == 0

    def test_two_spaced_hyphens(self):
        # naive left-to-right scan finds both
        assert count_dashes("x - y - z") == 2

    def test_double_hyphen_and_em_dash(self):
        assert count_dashes("we met -- at noon") == 1
        assert count_dashes("wait—now") == 1

    def test_adjacent_spaced_hyphens(self):
        # scan resumes right after the matched hyphen, so both count
        assert count_dashes("a - - b") == 2

    def test_monotonic_append(self):
        rng = random.Random(99)
        for _ in range(200):
            text = "".join(rng.choices(DASH_ALPHABET, k=rng.randint(0, 40)))
            assert count_dashes(text + "\nx - y") == count_dashes(text) + 1

    def test_against_oracle(self):
        rng = random.Random(1234)
        for _ in range(N_ORACLE_SEQUENCES):
            text = "".join(rng.choices(DASH_ALPHABET, k=rng.randint(0, 60)))
            assert count_dashes(text) == oracles.dash_count(text), repr(text)


class TestSemicolons:
    def test_counts_characters(self):
        assert count_semicolons("a;b;c") == 2

    def test_empty(self):
        assert count_semicolons("") == 0

    def test_fixture_file(self):
        # constructed to hold exactly nine
        text = fixture_path("finders", "semi_9.txt").read_text(encoding="utf-8")
        assert count_semicolons(text) == 9

    def test_against_oracle(self):
        rng = random.Random(77)
        for _ in range(N_ORACLE_SEQUENCES):
            text = "".join(rng.choices(DASH_ALPHABET, k=rng.randint(0, 60)))
            assert count_semicolons(text) == oracles.semicolon_count(text)


class TestAlliteration:
    def test_two_word_pair(self):
        sents = split_sentences("characterized character")
        assert count_alliteration(sents) == 1

    def test_single_long_run_counts_once(self):
        sents = split_sentences("Peter Piper picked plums")
        assert count_alliteration(sents) == 1

    def test_two_separate_runs(self):
        # maximal runs: [sweet smell], [big bad]
        sents = split_sentences("sweet smell of big bad wolves")
        assert count_alliteration(sents) == 2

    def test_case_insensitive(self):
        assert count_alliteration(split_sentences("Big bald")) == 1

    def test_digit_leading_word_never_participates(self):
        assert count_alliteration(split_sentences("42nd fortune found")) == 1

    def test_runs_do_not_cross_sentences(self):
        assert count_alliteration(split_sentences("sweet song. silver sea.")) == 2

    def test_against_oracle(self, tag_lexicon):
        rng = random.Random(4242)
        for _ in range(N_ORACLE_SEQUENCES):
            sents = random_sentences(rng)
            assert count_alliteration(sents) == oracles.alliteration_count(
                word_lists(sents)
            )


class TestAnaphora:
    def test_shared_opening_words(self):
        sents = split_sentences("I have a dream today. I have a dream that endures.")
        assert count_anaphora(sents) == 1

    def test_no_shared_prefix(self):
        assert count_anaphora(split_sentences("Alpha. Beta.")) == 0

    def test_maximal_run_counts_once(self):
        sents = split_sentences("We act. We act. We act. They rest.")
        assert count_anaphora(sents) == 1

    def test_two_runs(self):
        sents = split_sentences("We go. We stay. Hope lives. Hope dies.")
        assert count_anaphora(sents) == 2

    def test_against_oracle(self, tag_lexicon):
        rng = random.Random(515)
        for _ in range(N_ORACLE_SEQUENCES):
            sents = random_sentences(rng)
            assert count_anaphora(sents) == oracles.anaphora_count(word_lists(sents))


class TestEpistrophe:
    def test_shared_final_word(self):
        assert count_epistrophe(split_sentences("See it done. Get it done.")) == 1

    def test_no_shared_suffix(self):
        assert count_epistrophe(split_sentences("Alpha. Beta.")) == 0

    def test_fixture_file(self):
        # constructed to hold exactly nine
        text = fixture_path("finders", "epi_9.txt").read_text(encoding="utf-8")
        assert count_epistrophe(split_sentences(text)) == 9

    def test_against_oracle(self, tag_lexicon):
        rng = random.Random(616)
        for _ in range(N_ORACLE_SEQUENCES):
            sents = random_sentences(rng)
            assert count_epistrophe(sents) == oracles.epistrophe_count(
                word_lists(sents)
            )


class TestParallelism:
    def test_three_matching_trigrams(self, tag_lexicon):
        sents = split_sentences("of the people, by the people, for the people")
        assert count_parallelism(sents, tag_lexicon) == 1

    def test_single_word(self, tag_lexicon):
        assert count_parallelism(split_sentences("red"), tag_lexicon) == 0

    def test_verb_adverb_bigrams(self, tag_lexicon):
        # bundled lexicon: run/jump/swim VERB, fast/high/far ADV
        sents = split_sentences("run fast jump high swim far")
        assert count_parallelism(sents, tag_lexicon) == 1

    def test_fallback_nouns_still_count(self, tag_lexicon):
        # two unknown words both default to NOUN: a size-1 run
        sents = split_sentences("zzgloop zzgleep")
        assert count_parallelism(sents, tag_lexicon) == 1

    def test_larger_n_consumes_positions(self, tag_lexicon):
        # one 4-gram run; its words may not be recounted at smaller sizes
        sents = split_sentences(
            "bright stars burned above, little lamps flickered below"
        )
        assert count_parallelism(sents, tag_lexicon) == 1

    def test_against_oracle(self, tag_lexicon):
        rng = random.Random(717)
        for _ in range(N_ORACLE_SEQUENCES):
            sents = random_sentences(rng)
            assert count_parallelism(sents, tag_lexicon) == oracles.parallelism_count(
                tag_lists(sents, tag_lexicon)
            )


class TestCountAll:
    def test_empty_document(self, tag_lexicon):
        counts = count_all("", tag_lexicon)
        assert counts.total == 0

    def test_simple_composition(self, tag_lexicon):
        counts = count_all("a - b; c", tag_lexicon)
        assert counts[StrategyKind.DASH] == 1
        assert counts[StrategyKind.SEMICOLON] == 1
        # "b" and "c" are out-of-lexicon, share the NOUN fallback, and
        # fallback runs deliberately still count as parallelism
        assert counts[StrategyKind.PARALLELISM] == 1
        assert counts.total == 3

    def test_fixture_suite(self, tag_lexicon):
        manifest = fixture_path("finders", "expected_counts.tsv").read_text(
            encoding="utf-8"
        )
        for line in manifest.strip().splitlines():
            name, strategy, expected = line.split("\t")
            text = fixture_path("finders", name).read_text(encoding="utf-8")
            counts = count_all(text, tag_lexicon)
            assert counts[StrategyKind.from_name(strategy)] == int(expected), name

    def test_total_matches_individual_finders(self, tag_lexicon):
        rng = random.Random(818)
        for _ in range(100):
            sents = random_sentences(rng)
            doc = " ".join(s.text for s in sents)
            counts = count_all(doc, tag_lexicon)
            assert counts.total == sum(counts[k] for k in STRATEGIES)

    def test_sentence_permutation_invariance(self, tag_lexicon):
        # dash/semicolon/alliteration are local, so shuffling sentences
        # leaves them unchanged
        rng = random.Random(919)
        for _ in range(100):
            sents = random_sentences(rng)
            texts = [s.text for s in sents]
            shuffled = texts[:]
            rng.shuffle(shuffled)
            a = count_all(" ".join(texts), tag_lexicon)
            b = count_all(" ".join(shuffled), tag_lexicon)
            for kind in (
                StrategyKind.DASH,
                StrategyKind.SEMICOLON,
                StrategyKind.ALLITERATION,
            ):
                assert a[kind] == b[kind]


class TestStrategyCounts:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            StrategyCounts(dash=-1)

    def test_addition(self):
        a = StrategyCounts(dash=1, parallelism=2)
        b = StrategyCounts(semicolon=3)
        c = a + b
        assert c.total == 6
        assert c[StrategyKind.SEMICOLON] == 3

    def test_enum_order_is_column_order(self):
        assert [k.value for k in STRATEGIES] == [
            "dash", "semicolon", "alliteration", "anaphora", "epistrophe",
            "parallelism",
        ]
