"""Letter frequencies and the friction coefficients derived from them.

English letter frequencies are inverted and rescaled to [0, 1], so the most
frequent letter (e) slides freely with coefficient 0.0 and the rarest ones
(j, q) drag at 1.0. The 26 coefficients plus their median (the uniform patch
value) are everything the friction engine needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DomainError

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

# Relative frequency of each letter in English prose.
LETTER_FREQUENCIES: Mapping[str, float] = MappingProxyType({
    "a": 0.0850, "b": 0.0207, "c": 0.0454, "d": 0.0338, "e": 0.1116,
    "f": 0.0181, "g": 0.0247, "h": 0.0300, "i": 0.0754, "j": 0.0020,
    "k": 0.0110, "l": 0.0549, "m": 0.0301, "n": 0.0665, "o": 0.0716,
    "p": 0.0317, "q": 0.0020, "r": 0.0758, "s": 0.0574, "t": 0.0695,
    "u": 0.0363, "v": 0.0101, "w": 0.0129, "x": 0.0029, "y": 0.0178,
    "z": 0.0027,
})

# Scaled complements at the 4-decimal precision used everywhere downstream.
# Stored as constants rather than re-derived so tables rebuild bit-identically;
# scaled_complement() reproduces every entry to 4 decimals from the frequency.
SCALED_COMPLEMENTS: Mapping[str, float] = MappingProxyType({
    "a": 0.2427, "b": 0.8294, "c": 0.6040, "d": 0.7099, "e": 0.0000,
    "f": 0.8531, "g": 0.7929, "h": 0.7445, "i": 0.3303, "j": 1.0000,
    "k": 0.9179, "l": 0.5173, "m": 0.7436, "n": 0.4115, "o": 0.3650,
    "p": 0.7290, "q": 1.0000, "r": 0.3266, "s": 0.4945, "t": 0.3841,
    "u": 0.6870, "v": 0.9261, "w": 0.9005, "x": 0.9918, "y": 0.8558,
    "z": 0.9936,
})

# Extremes of (1 - f): e is the most frequent letter, j/q tie for the least.
MIN_COMPLEMENT = 0.8884
MAX_COMPLEMENT = 0.9980

# Median of the 26 scaled complements; the uniform patch coefficient.
PATCH_COEFFICIENT = 0.7363


def scaled_complement(f: float, min_c: float = MIN_COMPLEMENT,
                      max_c: float = MAX_COMPLEMENT) -> float:
    """Map a letter frequency to its [0, 1] friction coefficient.

    The complement (1 - f) is rescaled linearly so min_c lands on 0 and
    max_c on 1; more frequent letters therefore get lower coefficients.
    """
    if not 0.0 < f < 1.0:
        raise DomainError(f"frequency must be in (0, 1), got {f}")
    complement = 1.0 - f
    if not min_c <= complement <= max_c:
        raise DomainError(
            f"complement {complement} outside [{min_c}, {max_c}]")
    return (complement - min_c) / (max_c - min_c)


def median(values: Iterable[float]) -> float:
    """Middle element of the sorted values (mean of the two middle if even)."""
    ordered = sorted(values)
    if not ordered:
        raise DomainError("median of an empty sequence")
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2.0


@dataclass(frozen=True)
class CoefficientTable:
    """Immutable bundle of frequencies, coefficients and the patch median."""

    freq: Mapping[str, float]
    sc: Mapping[str, float]
    min_c: float
    max_c: float
    patch: float

    def coefficient(self, letter: str) -> float:
        return self.sc[letter]

    def as_array(self) -> tuple[float, ...]:
        """The 26 coefficients in a..z order, for vectorized lookup."""
        return tuple(self.sc[c] for c in ALPHABET)


def build_table() -> CoefficientTable:
    """Assemble the coefficient table; patch = median of the 26 coefficients."""
    return CoefficientTable(
        freq=LETTER_FREQUENCIES,
        sc=SCALED_COMPLEMENTS,
        min_c=MIN_COMPLEMENT,
        max_c=MAX_COMPLEMENT,
        patch=median(SCALED_COMPLEMENTS.values()),
    )


def table_tsv(table: CoefficientTable) -> str:
    """TSV dump (letter, frequency, scaled complement) for documentation."""
    lines = ["letter\tfrequency\tscaled_complement"]
    for c in ALPHABET:
        lines.append(f"{c}\t{table.freq[c]:.4f}\t{table.sc[c]:.4f}")
    return "\n".join(lines) + "\n"
