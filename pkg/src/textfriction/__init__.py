"""Sliding-friction text analysis.

Maps letters to friction coefficients derived from English letter
frequencies, slides a uniform square patch down the wrapped text, and
relates the resulting friction statistics to classic readability scores.
"""

from .analytics import (
    REFERENCE_FIT,
    Histogram,
    RegressionModel,
    histogram,
    ols_fit,
    predict_ease,
)
from .coefficients import (
    ALPHABET,
    LETTER_FREQUENCIES,
    MAX_COMPLEMENT,
    MIN_COMPLEMENT,
    PATCH_COEFFICIENT,
    SCALED_COMPLEMENTS,
    CoefficientTable,
    build_table,
    median,
    scaled_complement,
)
from .corpus import CorpusRecord, RunConfig, analyze_file, batch, fetch_manifest
from .errors import DomainError
from .friction import (
    DEFAULT_WIDTH,
    FrictionProfile,
    TextSurface,
    build_surface,
    profile_stats,
    sliding_friction,
)
from .preprocess import (
    LetterStream,
    strip_gutenberg_boilerplate,
    to_ascii,
    to_letter_stream,
    transliterate,
)
from .readability import (
    ReadabilityScore,
    TextCounts,
    count_syllables,
    count_text,
    flesch_kincaid_grade,
    flesch_reading_ease,
    score_text,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "DEFAULT_WIDTH",
    "LETTER_FREQUENCIES",
    "MAX_COMPLEMENT",
    "MIN_COMPLEMENT",
    "PATCH_COEFFICIENT",
    "REFERENCE_FIT",
    "SCALED_COMPLEMENTS",
    "CoefficientTable",
    "CorpusRecord",
    "DomainError",
    "FrictionProfile",
    "Histogram",
    "LetterStream",
    "ReadabilityScore",
    "RegressionModel",
    "RunConfig",
    "TextCounts",
    "TextSurface",
    "analyze_file",
    "batch",
    "build_surface",
    "build_table",
    "count_syllables",
    "count_text",
    "fetch_manifest",
    "flesch_kincaid_grade",
    "flesch_reading_ease",
    "histogram",
    "median",
    "ols_fit",
    "predict_ease",
    "profile_stats",
    "scaled_complement",
    "score_text",
    "sliding_friction",
    "strip_gutenberg_boilerplate",
    "to_ascii",
    "to_letter_stream",
    "tokenize",
    "transliterate",
]
