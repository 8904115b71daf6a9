"""rhetkit: rhetorical-strategy stylometry and its applications.

Counts six rhetorical strategies (dash, semicolon, alliteration,
anaphora, epistrophe, parallelism) in text and uses the resulting
probability profiles for authorship attribution, re-election prediction,
style-targeted text generation, entropy analysis, and extractive
summarization.
"""

from .classify import (
    CentroidPair,
    Outcome,
    PredictionReport,
    RankedMatch,
    build_centroids,
    centroid_spread_stats,
    identify,
    predict_reelection,
)
from .entropy import EntropyReport, analyze, relative_entropy, shannon_entropy, word_distribution
from .errors import (
    DegenerateProfileError,
    EmptyDocumentError,
    GenerationError,
    InsufficientCandidatesError,
    LexiconError,
    RhetkitError,
    StoreError,
)
from .finders import (
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
from .generate import (
    GeneratedText,
    GenerationMode,
    GenerationSpec,
    LengthDistribution,
    generate,
    inject_punctuation,
    markov_step_probability,
    next_word,
)
from .gloss import GlossLexicon, gloss_of, load_lexicon
from .profiles import (
    ProfileStoreRecord,
    StrategyProfile,
    normalized_rms,
    rms,
    similarity,
    store_load,
    store_save,
    to_profile,
)
from .summarize import DEFAULT_WEIGHTS, SentenceScore, score_sentence, summarize
from .textseg import Sentence, TagLexicon, TaggedToken, Token, split_sentences, tag, tokenize

__version__ = "0.1.0"
