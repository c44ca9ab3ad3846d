"""Corpus-level statistics: ease-vs-friction regression and histograms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class RegressionModel:
    slope: float      # ease units per friction unit
    intercept: float  # ease units
    r: float          # Pearson correlation of the fitted points
    n: int


# Canonical linear fit relating mean friction to reading ease, kept as a
# named model for predicted-vs-measured comparisons and for single-text runs
# where no corpus fit exists. The correlation of the original 32-text fit is
# not published, hence r = 0.
REFERENCE_FIT = RegressionModel(slope=0.225, intercept=-687.0, r=0.0, n=32)


def ols_fit(points: Iterable[tuple[float, float]]) -> RegressionModel:
    """Ordinary least squares over (mean friction, ease) points.

    Pearson r is computed alongside and defined as 0 when the response has
    no variance (a perfectly horizontal data set).
    """
    pts = [(float(x), float(y)) for x, y in points]
    n = len(pts)
    if n < 2:
        raise DomainError(f"regression needs >= 2 points, got {n}")
    mean_x = sum(x for x, _ in pts) / n
    mean_y = sum(y for _, y in pts) / n
    sxx = sum((x - mean_x) ** 2 for x, _ in pts)
    syy = sum((y - mean_y) ** 2 for _, y in pts)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in pts)
    if sxx == 0.0:
        raise DomainError("regression is degenerate: all x values equal")
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    r = 0.0 if syy == 0.0 else sxy / math.sqrt(sxx * syy)
    return RegressionModel(slope=slope, intercept=intercept, r=r, n=n)


def predict_ease(model: RegressionModel, mean_friction: float) -> float:
    return model.intercept + model.slope * mean_friction


@dataclass(frozen=True)
class Histogram:
    bin_width: float
    bins: tuple[tuple[float, int], ...]  # (lower edge, count), edges ascending


def histogram(values: Sequence[float], bin_width: float) -> Histogram:
    """Half-open bins [k*w, (k+1)*w) anchored at integer multiples of the
    width, covering min..max contiguously (interior bins may be empty)."""
    vals = [float(v) for v in values]
    if not vals:
        raise DomainError("histogram of an empty sequence")
    if not bin_width > 0:
        raise DomainError(f"bin width must be > 0, got {bin_width}")
    lo = math.floor(min(vals) / bin_width)
    hi = math.floor(max(vals) / bin_width)
    counts = [0] * (hi - lo + 1)
    for v in vals:
        counts[math.floor(v / bin_width) - lo] += 1
    bins = tuple((k * bin_width, counts[k - lo]) for k in range(lo, hi + 1))
    return Histogram(bin_width=bin_width, bins=bins)


def regression_dat(model: RegressionModel) -> str:
    """One regression.dat line: slope, intercept, r, n."""
    return f"{model.slope:.6f}\t{model.intercept:.6f}\t{model.r:.6f}\t{model.n}\n"


def comparison_dat_line(filename: str, measured: float, predicted: float) -> str:
    """One fig5.dat row: filename, measured ease, predicted ease."""
    return f"{filename}\t{measured:.6f}\t{predicted:.6f}\n"
