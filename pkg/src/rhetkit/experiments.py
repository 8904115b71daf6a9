"""Desk-scale experiment drivers: attribution sweep, style-similarity
sweep for generated text, entropy-mode comparison, and the re-election
predictor diagnostics. These back the CLI's experiment subcommand and the
acceptance suite.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from pathlib import Path

from . import data as bundled
from .classify import (
    CentroidPair,
    build_centroids,
    centroid_spread_stats,
    identify,
    predict_reelection,
)
from .entropy import analyze
from .finders import StrategyCounts, count_all
from .generate import GenerationMode, GenerationSpec, generate
from .gloss import GlossLexicon
from .profiles import StrategyProfile, normalized_rms, similarity, store_load, to_profile
from .textseg import TagLexicon

# The six chain seed words driving the generation experiments.
GENERATION_SEED_WORDS = ("bird", "generalization", "hand", "hasty", "indeed", "passion")

# Canonical generation settings for the style-similarity sweep: ten words
# per sentence, five sentences, semicolons in every sentence.
CANONICAL_WORDS_PER_SENTENCE = 10
CANONICAL_NUM_SENTENCES = 5
CANONICAL_SEMICOLON_PERCENT = 100.0

# Semicolon-dominant reference mix used by the similarity sweep, in the
# style of the bundled six-style table (no dashes, no anaphora or
# epistrophe, semicolons the largest share, alliteration minor).
SEMICOLON_REFERENCE = StrategyProfile(
    "semicolon-reference", (0.0, 40.0, 21.0, 0.0, 0.0, 39.0)
)


@dataclass(frozen=True)
class AttributionRow:
    extra_authors: int
    tests_ran: int
    percent_correct: float


@dataclass(frozen=True)
class AttributionResult:
    rows: tuple[AttributionRow, ...]
    total_tests: int
    average_percent: float
    full_set_percent: float  # all authors in play, the leave-one-out score


def load_author_corpus() -> dict[str, list[str]]:
    """The bundled author excerpt pairs, keyed by author."""
    corpus: dict[str, list[str]] = {}
    root = bundled.corpus_path("authors")
    for path in sorted(Path(root).glob("*.txt")):
        author = path.stem.rsplit("_", 1)[0]
        corpus.setdefault(author, []).append(path.read_text(encoding="utf-8"))
    return corpus


def _merged_profile(label: str, counts: list[StrategyCounts]) -> StrategyProfile:
    merged = StrategyCounts()
    for c in counts:
        merged = merged + c
    return to_profile(label, merged)


def leave_one_out(
    corpus: dict[str, list[str]] | None = None,
    lexicon: TagLexicon | None = None,
) -> AttributionResult:
    """Leave-one-out attribution over the corpus, swept by candidate-set size.

    For every held-out text and every number of extra authors e, the
    candidate pool is the true author plus the next e authors in rotation;
    the held-out text counts as correct when the true author ranks first.
    The e = all-others row is the full leave-one-out accuracy.
    """
    if corpus is None:
        corpus = load_author_corpus()
    if lexicon is None:
        lexicon = bundled.default_tag_lexicon()
    authors = sorted(corpus)
    counts = {a: [count_all(t, lexicon) for t in corpus[a]] for a in authors}

    rows: list[AttributionRow] = []
    full_set_percent = 0.0
    for extra in range(1, len(authors)):
        correct = 0
        tests = 0
        for idx, author in enumerate(authors):
            pool = [author] + [
                authors[(idx + k) % len(authors)] for k in range(1, extra + 1)
            ]
            for held_index, held in enumerate(counts[author]):
                known = []
                for candidate in pool:
                    kept = [
                        c
                        for j, c in enumerate(counts[candidate])
                        if not (candidate == author and j == held_index)
                    ]
                    known.append(_merged_profile(candidate, kept))
                unknown = to_profile("unknown", held)
                ranked = identify(unknown, known)
                correct += ranked[0].label == author
                tests += 1
        percent = 100.0 * correct / tests
        rows.append(AttributionRow(extra, tests, percent))
        if extra == len(authors) - 1:
            full_set_percent = percent
    total = sum(r.tests_ran for r in rows)
    average = sum(r.percent_correct * r.tests_ran for r in rows) / total
    return AttributionResult(tuple(rows), total, average, full_set_percent)


def style_table_profiles(include_unknown: bool = False) -> list[StrategyProfile]:
    """The bundled six-style table used as a normalization pool."""
    records = store_load(bundled.fixture_path("figure3.tsv"))
    profiles = [r.profile for r in records]
    if not include_unknown:
        profiles = [p for p in profiles if p.label != "Unknown"]
    return profiles


@dataclass(frozen=True)
class SimilarityRun:
    rng_seed: int
    seed_word: str
    rms_to_reference: float
    similarity_percent: float


@dataclass(frozen=True)
class SimilarityResult:
    runs: tuple[SimilarityRun, ...]
    mean_similarity: float
    reference: StrategyProfile


def nlg_similarity(
    base_seed: int,
    n_runs: int = 20,
    gloss_lexicon: GlossLexicon | None = None,
    tag_lexicon: TagLexicon | None = None,
    mode: GenerationMode = GenerationMode.RANDOM,
) -> SimilarityResult:
    """Style similarity of generated text to the semicolon-dominant reference.

    Each run generates text under the canonical settings, profiles it, and
    ranks it against the six bundled style rows by RMS to the reference;
    the run's similarity is 100 minus its normalized RMS in that pool.
    """
    if gloss_lexicon is None:
        gloss_lexicon = bundled.default_gloss_lexicon()
    if tag_lexicon is None:
        tag_lexicon = bundled.default_tag_lexicon()
    pool = style_table_profiles()
    runs = []
    for i in range(n_runs):
        word = GENERATION_SEED_WORDS[i % len(GENERATION_SEED_WORDS)]
        spec = GenerationSpec(
            seed_word=word,
            words_per_sentence=CANONICAL_WORDS_PER_SENTENCE,
            num_sentences=CANONICAL_NUM_SENTENCES,
            semicolon_percent=CANONICAL_SEMICOLON_PERCENT,
            mode=mode,
            rng_seed=base_seed + i,
        )
        text = generate(spec, gloss_lexicon).text
        profile = to_profile(f"run-{base_seed + i}", count_all(text, tag_lexicon))
        normalized = normalized_rms(SEMICOLON_REFERENCE, pool + [profile])
        runs.append(
            SimilarityRun(
                rng_seed=base_seed + i,
                seed_word=word,
                rms_to_reference=_rms_to_reference(profile),
                similarity_percent=similarity(normalized[profile.label]),
            )
        )
    mean = statistics.mean(r.similarity_percent for r in runs)
    return SimilarityResult(tuple(runs), mean, SEMICOLON_REFERENCE)


def _rms_to_reference(profile: StrategyProfile) -> float:
    from .profiles import rms

    return rms(profile, SEMICOLON_REFERENCE)


@dataclass(frozen=True)
class EntropyOrderingResult:
    deterministic_mean: float
    random_mean: float
    per_word_deterministic: dict[str, float]
    per_word_random_mean: dict[str, float]


def entropy_ordering(
    base_seed: int,
    seeds_per_word: int = 20,
    gloss_lexicon: GlossLexicon | None = None,
) -> EntropyOrderingResult:
    """Mean relative entropy of random-mode vs deterministic-mode output."""
    if gloss_lexicon is None:
        gloss_lexicon = bundled.default_gloss_lexicon()
    det: dict[str, float] = {}
    rnd: dict[str, list[float]] = {}
    for word in GENERATION_SEED_WORDS:
        spec = GenerationSpec(
            seed_word=word,
            words_per_sentence=CANONICAL_WORDS_PER_SENTENCE,
            num_sentences=CANONICAL_NUM_SENTENCES,
        )
        det[word] = analyze(generate(spec, gloss_lexicon).text).relative_entropy
        rnd[word] = []
        for i in range(seeds_per_word):
            spec = GenerationSpec(
                seed_word=word,
                words_per_sentence=CANONICAL_WORDS_PER_SENTENCE,
                num_sentences=CANONICAL_NUM_SENTENCES,
                mode=GenerationMode.RANDOM,
                rng_seed=base_seed + i,
            )
            rnd[word].append(
                analyze(generate(spec, gloss_lexicon).text).relative_entropy
            )
    all_random = [v for values in rnd.values() for v in values]
    return EntropyOrderingResult(
        deterministic_mean=statistics.mean(det.values()),
        random_mean=statistics.mean(all_random),
        per_word_deterministic=det,
        per_word_random_mean={w: statistics.mean(v) for w, v in rnd.items()},
    )


@dataclass(frozen=True)
class PredictorDiagnostics:
    centroids: CentroidPair
    spread_population: float
    spread_sample: float
    per_row: tuple[tuple[str, str], ...]  # (label, predicted outcome)
    winners_correct: int
    losers_correct: int


def predictor_diagnostics() -> PredictorDiagnostics:
    """Centroid statistics and per-row predictions over the bundled tables."""
    winners = [r.profile for r in store_load(bundled.fixture_path("inaugural_winners.tsv"))]
    losers = [r.profile for r in store_load(bundled.fixture_path("inaugural_losers.tsv"))]
    centroids = build_centroids(winners, losers)
    spread = centroid_spread_stats(centroids)
    per_row = []
    winners_correct = 0
    losers_correct = 0
    for profile in winners:
        outcome = predict_reelection(profile, centroids).outcome
        per_row.append((profile.label, outcome.value))
        winners_correct += outcome.value == "win"
    for profile in losers:
        outcome = predict_reelection(profile, centroids).outcome
        per_row.append((profile.label, outcome.value))
        losers_correct += outcome.value == "lose"
    return PredictorDiagnostics(
        centroids=centroids,
        spread_population=spread["population"],
        spread_sample=spread["sample"],
        per_row=tuple(per_row),
        winners_correct=winners_correct,
        losers_correct=losers_correct,
    )
