"""The friction engine.

The letter stream is wrapped into a fixed-width surface (one coefficient per
cell, trailing partial row discarded) and a uniform square patch slides down
it one row at a time. Each placement contributes one friction value:

    value[y] = patch * sum(cells in rows y .. y+window-1)

Because the patch spans the full width, every window covers whole rows, so
window sums are assembled from per-row sums in O(rows) instead of
O(rows * window area). The test suite pins this against the direct
double sum. All accumulation is float64.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coefficients import PATCH_COEFFICIENT, CoefficientTable
from .errors import DomainError
from .preprocess import LetterStream

DEFAULT_WIDTH = 100


@dataclass(frozen=True)
class TextSurface:
    width: int
    rows: int
    cells: np.ndarray  # (rows, width) row-major, coefficients in [0, 1]


@dataclass(frozen=True)
class ProfileStats:
    mean: float
    stddev: float  # population form, divisor n
    n_windows: int


@dataclass(frozen=True)
class FrictionProfile:
    values: np.ndarray
    mean: float
    stddev: float
    window_rows: int
    patch: float


def build_surface(stream: LetterStream, table: CoefficientTable,
                  width: int = DEFAULT_WIDTH) -> TextSurface:
    """Map each letter to its coefficient and wrap into rows of `width` cells.

    Trailing letters that do not fill a complete row are discarded; the patch
    could never fully cover them. Streams shorter than one window are accepted
    here and rejected by sliding_friction.
    """
    if width < 1:
        raise DomainError(f"surface width must be >= 1, got {width}")
    if len(stream) == 0:
        raise DomainError("no alphabetic content")
    coef = np.asarray(table.as_array(), dtype=np.float64)
    codes = np.frombuffer(stream.letters.encode("ascii"), dtype=np.uint8)
    rows = codes.size // width
    cells = coef[codes[: rows * width] - ord("a")].reshape(rows, width)
    cells.setflags(write=False)
    return TextSurface(width=width, rows=rows, cells=cells)


def sliding_friction(surface: TextSurface, patch: float = PATCH_COEFFICIENT,
                     window_rows: int | None = None) -> FrictionProfile:
    """Slide the uniform patch down the surface and collect friction values.

    The patch is square, so it spans window_rows = width rows by default.
    Every full placement yields a value: n_windows = rows - window_rows + 1.
    """
    if window_rows is None:
        window_rows = surface.width
    if window_rows < 1:
        raise DomainError(f"window must cover >= 1 row, got {window_rows}")
    if surface.rows < window_rows:
        raise DomainError(
            f"text too short for window: {surface.rows} rows < {window_rows}")
    row_sums = surface.cells.sum(axis=1, dtype=np.float64)
    csum = np.concatenate(([0.0], np.cumsum(row_sums)))
    values = patch * (csum[window_rows:] - csum[:-window_rows])
    values.setflags(write=False)
    stats = profile_stats(values)
    return FrictionProfile(values=values, mean=stats.mean, stddev=stats.stddev,
                           window_rows=window_rows, patch=patch)


def profile_stats(values: Sequence[float] | np.ndarray) -> ProfileStats:
    """Mean and population standard deviation (divisor n) of the values."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise DomainError("no friction values")
    return ProfileStats(mean=float(v.mean()), stddev=float(v.std()),
                        n_windows=int(v.size))


def profile_dat(filename: str, profile: FrictionProfile) -> str:
    """Per-text data file: source filename, then one line per window with the
    friction value and its deviation from the mean, six decimals, tabs, LF."""
    lines = [filename + "\n"]
    mean = profile.mean
    lines.extend(f"{v:.6f}\t{v - mean:.6f}\n" for v in profile.values)
    return "".join(lines)
