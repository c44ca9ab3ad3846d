"""Flesch Reading Ease and Flesch-Kincaid grade, self-contained.

No external text-statistics library: sentence and word tokenization plus a
deterministic syllable heuristic (vowel groups with a silent-e correction)
feed the two classic formulas. Scores run on transliterated ASCII text,
before the letter-stream reduction strips the punctuation they need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError

# Maximal runs of letters; apostrophes are kept when internal to a word.
_WORD = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*")
# A sentence ends at a run of terminators followed by whitespace or EOF.
_SENTENCE_END = re.compile(r"[.!?]+(?:\s+|$)")
_VOWEL_GROUP = re.compile(r"[aeiouy]+")
_NON_ALPHA = re.compile(r"[^a-z]")


@dataclass(frozen=True)
class TextCounts:
    words: int
    sentences: int
    syllables: int


@dataclass(frozen=True)
class ReadabilityScore:
    ease: float   # nominally 0-100, deliberately unclamped
    grade: float  # US school grade, may be fractional


def tokenize(text: str) -> tuple[list[str], list[str]]:
    """Split text into (sentences, words).

    Abbreviations are deliberately not special-cased ("Mr. Smith" counts as
    two sentences): the rule stays simple and deterministic. Segments without
    any word are discarded.
    """
    words = _WORD.findall(text)
    if not words:
        raise DomainError("unscorable text: no words")
    sentences = [seg for seg in _SENTENCE_END.split(text) if _WORD.search(seg)]
    return sentences, words


def count_syllables(word: str) -> int:
    """Heuristic syllable count, never below 1.

    Counts vowel groups (a, e, i, o, u, y), then drops one for a terminal
    silent 'e' -- except when it closes a consonant+"le" ending ("table"),
    where the 'e' carries its own syllable.
    """
    letters = _NON_ALPHA.sub("", word.lower())
    if not letters:
        return 1
    groups = len(_VOWEL_GROUP.findall(letters))
    if letters.endswith("e") and not (
        letters.endswith("le")
        and len(letters) >= 3
        and letters[-3] not in "aeiouy"
    ):
        groups -= 1
    return max(1, groups)


def _require_scorable(counts: TextCounts) -> None:
    if counts.sentences < 1 or counts.words < 1:
        raise DomainError("readability needs at least one word and one sentence")


def flesch_reading_ease(counts: TextCounts) -> float:
    """206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)."""
    _require_scorable(counts)
    return (206.835
            - 1.015 * (counts.words / counts.sentences)
            - 84.6 * (counts.syllables / counts.words))


def flesch_kincaid_grade(counts: TextCounts) -> float:
    """0.39*(words/sentences) + 11.8*(syllables/words) - 15.59."""
    _require_scorable(counts)
    return (0.39 * (counts.words / counts.sentences)
            + 11.8 * (counts.syllables / counts.words)
            - 15.59)


def count_text(text: str) -> TextCounts:
    sentences, words = tokenize(text)
    syllables = sum(count_syllables(w) for w in words)
    return TextCounts(words=len(words), sentences=len(sentences),
                      syllables=syllables)


def score_text(text: str) -> ReadabilityScore:
    counts = count_text(text)
    return ReadabilityScore(ease=flesch_reading_ease(counts),
                            grade=flesch_kincaid_grade(counts))


def readability_dat_line(filename: str, score: ReadabilityScore) -> str:
    """One readability.dat row: filename, ease, grade (six decimals, tabs)."""
    return f"{filename}\t{score.ease:.6f}\t{score.grade:.6f}\n"
