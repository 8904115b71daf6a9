"""Command-line frontend: one subcommand per application.

Subcommands: count, profile, identify, predict, generate, entropy,
summarize, experiment. Output is plain text by default; --format json
emits a stable machine-readable document with full-precision numbers.
Randomized subcommands require an explicit --seed; there is no wall-clock
seeding anywhere.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path

import click

from . import data as bundled
from . import experiments
from .classify import build_centroids, identify as rank_authors, predict_reelection
from .entropy import analyze
from .errors import RhetkitError
from .finders import STRATEGIES, count_all
from .generate import GenerationMode, GenerationSpec, LengthDistribution, generate
from .gloss import load_lexicon
from .profiles import (
    PROFILE_COLUMNS,
    ProfileStoreRecord,
    store_load,
    store_save,
    to_profile,
)
from .summarize import DEFAULT_WEIGHTS, load_weights, score_document, summarize as summarize_doc
from .textseg import TagLexicon


def _tag_lexicon(path: str | None) -> TagLexicon:
    return TagLexicon.load(path) if path else bundled.default_tag_lexicon()


def _gloss_lexicon(path: str | None):
    return load_lexicon(path) if path else bundled.default_gloss_lexicon()


def _iter_text_files(paths: tuple[str, ...]):
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            yield from sorted(p.rglob("*.txt"))
        else:
            yield p


def _emit(doc, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))


def friendly_errors(fn):
    """Convert toolkit errors into clean CLI error messages."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except RhetkitError as exc:
            raise click.ClickException(str(exc)) from None

    return wrapper


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    help="Output format.",
)
tags_option = click.option(
    "--tags", "tags_path", type=click.Path(exists=True), default=None,
    help="Tag lexicon TSV (defaults to the bundled one).",
)


@click.group()
def main() -> None:
    """Rhetorical-strategy stylometry toolkit."""


@main.command()
@click.argument("paths", nargs=-1, required=True)
@tags_option
@format_option
@friendly_errors
def count(paths, tags_path, fmt):
    """Count the six strategies in each file (directories recurse *.txt)."""
    lexicon = _tag_lexicon(tags_path)
    rows = []
    failures = 0
    for path in _iter_text_files(paths):
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            click.echo(f"{path}: error: {exc}", err=True)
            failures += 1
            continue
        counts = count_all(text, lexicon)
        rows.append({"file": str(path), **{k.value: counts[k] for k in STRATEGIES},
                     "total": counts.total})
        if fmt == "text":
            cells = "  ".join(f"{k.value}={counts[k]}" for k in STRATEGIES)
            click.echo(f"{path}: {cells}  total={counts.total}")
    _emit(rows, fmt)
    if failures:
        raise SystemExit(1)


@main.command(name="profile")
@click.argument("label")
@click.argument("paths", nargs=-1, required=True)
@click.option("--store", "store_path", required=True, type=click.Path(),
              help="Profile store TSV to create or append to.")
@tags_option
@format_option
@friendly_errors
def profile_cmd(label, paths, store_path, tags_path, fmt):
    """Profile texts under LABEL and append the record to a store."""
    lexicon = _tag_lexicon(tags_path)
    merged = None
    sources = []
    for path in _iter_text_files(paths):
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise click.ClickException(str(exc)) from None
        counts = count_all(text, lexicon)
        merged = counts if merged is None else merged + counts
        sources.append(str(path))
    if merged is None:
        raise click.UsageError("no input files found")
    records = store_load(store_path) if Path(store_path).exists() else []
    record = ProfileStoreRecord(
        profile=to_profile(label, merged),
        counts=merged,
        source_files=tuple(sources),
    )
    store_save(records + [record], store_path)
    doc = {"label": label, "sources": sources,
           **dict(zip(PROFILE_COLUMNS, record.profile.values))}
    if fmt == "text":
        click.echo(f"stored {label}: " + "  ".join(
            f"{c}={v!r}" for c, v in zip(PROFILE_COLUMNS, record.profile.values)))
    _emit(doc, fmt)


@main.command(name="identify")
@click.argument("unknown_path", type=click.Path(exists=True))
@click.option("--store", "store_path", required=True, type=click.Path(exists=True))
@tags_option
@format_option
@friendly_errors
def identify_cmd(unknown_path, store_path, tags_path, fmt):
    """Rank stored authors by closeness to the unknown text."""
    lexicon = _tag_lexicon(tags_path)
    text = Path(unknown_path).read_text(encoding="utf-8")
    unknown = to_profile("unknown", count_all(text, lexicon))
    known = [r.profile for r in store_load(store_path)]
    ranked = rank_authors(unknown, known)
    rows = [
        {"rank": i + 1, "label": m.label, "rms": m.rms,
         "similarity_percent": m.similarity_percent}
        for i, m in enumerate(ranked)
    ]
    if fmt == "text":
        for r in rows:
            sim = "" if r["similarity_percent"] is None else \
                f"  similarity={r['similarity_percent']:.4f}"
            click.echo(f"{r['rank']:2d}. {r['label']}  rms={r['rms']:.6f}{sim}")
    _emit(rows, fmt)


@main.command(name="predict")
@click.argument("address_path", type=click.Path(exists=True))
@click.option("--winners", "winners_path", required=True, type=click.Path(exists=True))
@click.option("--losers", "losers_path", required=True, type=click.Path(exists=True))
@tags_option
@format_option
@friendly_errors
def predict_cmd(address_path, winners_path, losers_path, tags_path, fmt):
    """Predict re-election outcome for an inaugural address."""
    lexicon = _tag_lexicon(tags_path)
    text = Path(address_path).read_text(encoding="utf-8")
    address = to_profile("address", count_all(text, lexicon))
    winners = [r.profile for r in store_load(winners_path)]
    losers = [r.profile for r in store_load(losers_path)]
    report = predict_reelection(address, build_centroids(winners, losers))
    doc = {
        "outcome": report.outcome.value,
        "rms_to_winners": report.rms_to_winners,
        "rms_to_losers": report.rms_to_losers,
        "rms_std_population": report.rms_std_population,
        "rms_std_sample": report.rms_std_sample,
    }
    if fmt == "text":
        click.echo(f"outcome: {report.outcome.value}")
        click.echo(f"rms to winners: {report.rms_to_winners:.6f}")
        click.echo(f"rms to losers:  {report.rms_to_losers:.6f}")
        click.echo(f"rms std dev (population): {report.rms_std_population:.6f}")
        click.echo(f"rms std dev (sample):     {report.rms_std_sample:.6f}")
    _emit(doc, fmt)


@main.command(name="generate")
@click.option("--seed-word", required=True, help="First word of the chain.")
@click.option("--words-per-sentence", type=int, default=10, show_default=True)
@click.option("--sentences", "num_sentences", type=int, default=5, show_default=True)
@click.option("--dash-percent", type=float, default=0.0, show_default=True)
@click.option("--semi-percent", type=float, default=0.0, show_default=True)
@click.option("--mode", type=click.Choice(["deterministic", "random"]),
              default="deterministic", show_default=True)
@click.option("--seed", "rng_seed", type=int, default=None,
              help="RNG seed (required in random mode).")
@click.option("--jitter", is_flag=True, help="Vary sentence lengths by +/- 2.")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True), default=None,
              help="Gloss lexicon TSV (defaults to the bundled one).")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the text here instead of stdout.")
@format_option
@friendly_errors
def generate_cmd(seed_word, words_per_sentence, num_sentences, dash_percent,
                 semi_percent, mode, rng_seed, jitter, lexicon_path, out_path, fmt):
    """Generate gloss-chain text with injected punctuation."""
    if mode == "random" and rng_seed is None:
        raise click.UsageError("--seed is required in random mode")
    spec = GenerationSpec(
        seed_word=seed_word,
        words_per_sentence=words_per_sentence,
        num_sentences=num_sentences,
        dash_percent=dash_percent,
        semicolon_percent=semi_percent,
        mode=GenerationMode(mode),
        rng_seed=0 if rng_seed is None else rng_seed,
        length_distribution=(
            LengthDistribution.JITTERED if jitter else LengthDistribution.FIXED
        ),
    )
    result = generate(spec, _gloss_lexicon(lexicon_path))
    if out_path:
        Path(out_path).write_text(result.text + "\n", encoding="utf-8")
    doc = {
        "text": result.text,
        "total_words": result.total_words,
        "injections": [
            {"sentence": ins.sentence_index, "strategy": ins.strategy.value,
             "position": ins.position}
            for ins in result.injection_log
        ],
        "fallbacks": [{"word_index": i, "word": w} for i, w in result.fallbacks],
    }
    if fmt == "text" and not out_path:
        click.echo(result.text)
    _emit(doc, fmt)


@main.command(name="entropy")
@click.argument("paths", nargs=-1, required=True)
@format_option
@friendly_errors
def entropy_cmd(paths, fmt):
    """Report word-distribution entropy per file."""
    rows = []
    failures = 0
    for path in _iter_text_files(paths):
        try:
            report = analyze(Path(path).read_text(encoding="utf-8"))
        except (OSError, RhetkitError) as exc:
            click.echo(f"{path}: error: {exc}", err=True)
            failures += 1
            continue
        rows.append({
            "file": str(path),
            "total_words": report.total_words,
            "distinct_words": report.distinct_words,
            "entropy_bits": report.entropy_bits,
            "max_entropy_bits": report.max_entropy_bits,
            "relative_entropy": report.relative_entropy,
        })
        if fmt == "text":
            click.echo(
                f"{path}: words={report.total_words} distinct={report.distinct_words} "
                f"H={report.entropy_bits:.4f} Hmax={report.max_entropy_bits:.4f} "
                f"relative={report.relative_entropy:.4f}"
            )
    _emit(rows, fmt)
    if failures:
        raise SystemExit(1)


@main.command(name="summarize")
@click.argument("path", type=click.Path(exists=True))
@click.option("--k", type=int, default=4, show_default=True,
              help="Number of sentences to extract.")
@click.option("--weights", "weights_path", type=click.Path(exists=True), default=None,
              help="strategy<TAB>weight TSV overriding the default table.")
@tags_option
@format_option
@friendly_errors
def summarize_cmd(path, k, weights_path, tags_path, fmt):
    """Extract the top-k sentences by rhetorical density."""
    lexicon = _tag_lexicon(tags_path)
    weights = load_weights(weights_path) if weights_path else DEFAULT_WEIGHTS
    text = Path(path).read_text(encoding="utf-8")
    picked = summarize_doc(text, k=k, weights=weights, lexicon=lexicon)
    scores = score_document(text, weights=weights, lexicon=lexicon)
    doc = {
        "summary": [{"sentence": s, "score": v} for s, v in picked],
        "sentence_scores": [
            {"index": s.sentence_index, "n_strategies": s.n_strategies,
             "score": s.score}
            for s in scores
        ],
    }
    if fmt == "text":
        for sentence, score in picked:
            click.echo(f"[{score:.4f}] {sentence}")
    _emit(doc, fmt)


@main.command(name="experiment")
@click.argument("name", type=click.Choice(
    ["attribution", "nlg-similarity", "entropy-ordering", "predictor-stats"]))
@click.option("--seed", "base_seed", type=int, default=None,
              help="Base RNG seed (required for the randomized experiments).")
@format_option
@friendly_errors
def experiment_cmd(name, base_seed, fmt):
    """Reproduce a named desk-scale experiment and print its table."""
    if name in ("nlg-similarity", "entropy-ordering") and base_seed is None:
        raise click.UsageError(f"--seed is required for {name}")
    if name == "attribution":
        result = experiments.leave_one_out()
        doc = {
            "rows": [
                {"extra_authors": r.extra_authors, "tests_ran": r.tests_ran,
                 "percent_correct": r.percent_correct}
                for r in result.rows
            ],
            "total_tests": result.total_tests,
            "average_percent": result.average_percent,
            "full_set_percent": result.full_set_percent,
        }
        if fmt == "text":
            click.echo("# Extra Authors\t# Tests Ran\t% Tests Correct")
            for r in result.rows:
                click.echo(f"{r.extra_authors}\t{r.tests_ran}\t{r.percent_correct:.1f}")
            click.echo(f"Total: {result.total_tests}\tAverage: "
                       f"{result.average_percent:.1f}")
    elif name == "nlg-similarity":
        result = experiments.nlg_similarity(base_seed)
        doc = {
            "reference": dict(zip(PROFILE_COLUMNS, result.reference.values)),
            "runs": [
                {"rng_seed": r.rng_seed, "seed_word": r.seed_word,
                 "rms_to_reference": r.rms_to_reference,
                 "similarity_percent": r.similarity_percent}
                for r in result.runs
            ],
            "mean_similarity": result.mean_similarity,
        }
        if fmt == "text":
            click.echo("seed\tword\trms\t% similarity")
            for r in result.runs:
                click.echo(f"{r.rng_seed}\t{r.seed_word}\t"
                           f"{r.rms_to_reference:.3f}\t{r.similarity_percent:.1f}")
            click.echo(f"mean similarity: {result.mean_similarity:.1f}")
    elif name == "entropy-ordering":
        result = experiments.entropy_ordering(base_seed)
        doc = {
            "deterministic_mean": result.deterministic_mean,
            "random_mean": result.random_mean,
            "per_word_deterministic": result.per_word_deterministic,
            "per_word_random_mean": result.per_word_random_mean,
        }
        if fmt == "text":
            click.echo("word\tdeterministic\trandom (mean)")
            for word in experiments.GENERATION_SEED_WORDS:
                click.echo(f"{word}\t{result.per_word_deterministic[word]:.4f}\t"
                           f"{result.per_word_random_mean[word]:.4f}")
            click.echo(f"means: deterministic={result.deterministic_mean:.4f} "
                       f"random={result.random_mean:.4f}")
    else:
        result = experiments.predictor_diagnostics()
        doc = {
            "spread_population": result.spread_population,
            "spread_sample": result.spread_sample,
            "winners_correct": result.winners_correct,
            "losers_correct": result.losers_correct,
            "per_row": [{"label": l, "outcome": o} for l, o in result.per_row],
        }
        if fmt == "text":
            click.echo(f"centroid spread std dev (population): "
                       f"{result.spread_population:.4f}")
            click.echo(f"centroid spread std dev (sample):     "
                       f"{result.spread_sample:.4f}")
            click.echo(f"winners predicted win: {result.winners_correct}/14")
            click.echo(f"losers predicted lose: {result.losers_correct}/14")
    _emit(doc, fmt)


if __name__ == "__main__":
    main()
