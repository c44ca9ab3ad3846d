"""Batch processing: run whole directories of texts through the pipeline and
write the run's data files.

A run produces, in the output directory:

    <stem>.dat       per text: filename line, then value<TAB>value-mean rows
    statistics.dat   per text: filename, mean friction, stddev
    readability.dat  per text: filename, ease, grade
    regression.dat   slope, intercept, r, n           (>= 2 texts)
    fig5.dat         per text: filename, measured ease, predicted ease

All floats are six-decimal, fields tab-separated, lines LF-terminated, and
file order is lexicographic by filename, so repeated runs on identical inputs
are byte-identical.
"""

from __future__ import annotations

import logging
import time
import urllib.request
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Mapping

from . import analytics, friction, plots, readability
from .coefficients import CoefficientTable, build_table
from .errors import DomainError
from .preprocess import strip_gutenberg_boilerplate, to_letter_stream, transliterate

log = logging.getLogger(__name__)

STATISTICS_FILE = "statistics.dat"
READABILITY_FILE = "readability.dat"
REGRESSION_FILE = "regression.dat"
COMPARISON_FILE = "fig5.dat"
RUN_FILES = {STATISTICS_FILE, READABILITY_FILE, REGRESSION_FILE, COMPARISON_FILE}

GUTENBERG_URL = "https://www.gutenberg.org/cache/epub/{id}/pg{id}.txt"


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    width: int = friction.DEFAULT_WIDTH
    patch: float | None = None  # None -> the coefficient table's median
    strip_boilerplate: bool = False
    encoding: str = "utf8"
    out_dir: Path = Path(".")
    bin_width: float = 2.0
    append: bool = False

    def __post_init__(self):
        object.__setattr__(self, "input_path", Path(self.input_path))
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.width < 1:
            raise DomainError(f"width must be >= 1, got {self.width}")
        if self.patch is not None and not 0.0 <= self.patch <= 1.0:
            raise DomainError(f"patch must be in [0, 1], got {self.patch}")
        if not self.bin_width > 0:
            raise DomainError(f"bin width must be > 0, got {self.bin_width}")


@dataclass(frozen=True)
class CorpusRecord:
    filename: str
    mean_friction: float
    stddev: float
    ease: float
    grade: float
    predicted_ease: float = float("nan")  # set once a regression exists


def dat_name(filename: str) -> str:
    """Profile filename: the input's last extension replaced by .dat."""
    return Path(filename).with_suffix(".dat").name


def analyze_file(path: Path | str, config: RunConfig,
                 table: CoefficientTable | None = None) -> CorpusRecord:
    """Run one text through preprocess -> friction -> readability.

    Writes the per-text profile to out_dir/<stem>.dat and returns the record.
    Texts shorter than one window raise DomainError.
    """
    path = Path(path)
    if table is None:
        table = build_table()
    raw = path.read_bytes()
    text = transliterate(raw, config.encoding).text
    if config.strip_boilerplate:
        text = strip_gutenberg_boilerplate(text)
    stream = to_letter_stream(text, source_len=len(raw))
    surface = friction.build_surface(stream, table, width=config.width)
    patch = table.patch if config.patch is None else config.patch
    profile = friction.sliding_friction(surface, patch=patch)
    score = readability.score_text(text)

    out = config.out_dir / dat_name(path.name)
    if out.resolve() == path.resolve():
        raise DomainError(f"profile output {out} would overwrite its input")
    config.out_dir.mkdir(parents=True, exist_ok=True)
    out.write_text(friction.profile_dat(path.name, profile),
                   encoding="ascii", newline="\n")
    return CorpusRecord(filename=path.name, mean_friction=profile.mean,
                        stddev=profile.stddev, ease=score.ease,
                        grade=score.grade)


def batch(config: RunConfig,
          table: CoefficientTable | None = None) -> list[CorpusRecord]:
    """Process every .txt in the input directory, lexicographically.

    Too-short or unscorable texts are skipped with a warning and the batch
    continues. The regression needs >= 2 analyzed texts; with fewer it is
    skipped with a notice and only statistics/readability files are written.
    """
    if table is None:
        table = build_table()
    directory = config.input_path
    if not directory.is_dir():
        raise DomainError(f"not a directory: {directory}")
    files = sorted((p for p in directory.iterdir()
                    if p.is_file() and p.suffix == ".txt"),
                   key=lambda p: p.name)
    if not files:
        raise DomainError(f"no .txt files in {directory}")

    records = []
    for path in files:
        try:
            records.append(analyze_file(path, config, table=table))
        except DomainError as exc:
            log.warning("skipping %s: %s", path.name, exc)
    if not records:
        raise DomainError("no analyzable texts in the corpus")

    model = None
    if len(records) >= 2:
        try:
            model = analytics.ols_fit(
                [(r.mean_friction, r.ease) for r in records])
        except DomainError as exc:
            log.warning("regression skipped: %s", exc)
    else:
        log.warning("regression skipped: need >= 2 texts, have %d", len(records))
    if model is not None:
        records = [replace(r, predicted_ease=analytics.predict_ease(model, r.mean_friction))
                   for r in records]

    _write_run_files(records, model, config)
    return records


def _write_run_files(records: list[CorpusRecord],
                     model: analytics.RegressionModel | None,
                     config: RunConfig) -> None:
    mode = "a" if config.append else "w"
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    with open(out / STATISTICS_FILE, mode, encoding="ascii", newline="\n") as fh:
        for r in records:
            fh.write(f"{r.filename}\t{r.mean_friction:.6f}\t{r.stddev:.6f}\n")
    with open(out / READABILITY_FILE, mode, encoding="ascii", newline="\n") as fh:
        for r in records:
            fh.write(readability.readability_dat_line(
                r.filename, readability.ReadabilityScore(r.ease, r.grade)))
    if model is not None:
        (out / REGRESSION_FILE).write_text(
            analytics.regression_dat(model), encoding="ascii", newline="\n")
        with open(out / COMPARISON_FILE, "w", encoding="ascii", newline="\n") as fh:
            for r in records:
                fh.write(analytics.comparison_dat_line(
                    r.filename, r.ease, r.predicted_ease))


# --- plot emission ---------------------------------------------------------

def load_run(run_dir: Path | str):
    """Rebuild records, per-text profiles and the model from a run directory.

    Returns (records, profiles, model); profiles maps source filename to the
    list of window values read back from its .dat file.
    """
    run_dir = Path(run_dir)
    stats_path = run_dir / STATISTICS_FILE
    if not stats_path.is_file():
        raise DomainError(f"not a run directory (missing {STATISTICS_FILE}): {run_dir}")

    def parse_rows(path):
        rows = {}
        if path.is_file():
            for line in path.read_text(encoding="ascii").splitlines():
                name, a, b = line.split("\t")
                rows[name] = (float(a), float(b))
        return rows

    stats = parse_rows(stats_path)
    scores = parse_rows(run_dir / READABILITY_FILE)
    predicted = parse_rows(run_dir / COMPARISON_FILE)

    records = []
    for name, (mf, sd) in stats.items():
        ease, grade = scores.get(name, (float("nan"), float("nan")))
        pred = predicted.get(name, (float("nan"), float("nan")))[1]
        records.append(CorpusRecord(filename=name, mean_friction=mf, stddev=sd,
                                    ease=ease, grade=grade, predicted_ease=pred))

    model = None
    reg_path = run_dir / REGRESSION_FILE
    if reg_path.is_file():
        slope, intercept, r, n = reg_path.read_text(encoding="ascii").split()
        model = analytics.RegressionModel(slope=float(slope), intercept=float(intercept),
                                          r=float(r), n=int(n))

    profiles = {}
    for path in sorted(run_dir.glob("*.dat")):
        if path.name in RUN_FILES:
            continue
        lines = path.read_text(encoding="ascii").splitlines()
        if not lines:
            continue
        source = lines[0]
        try:
            values = [float(line.split("\t")[0]) for line in lines[1:]]
        except ValueError:
            continue  # not a profile file
        profiles[source] = values
    return records, profiles, model


def emit_plots(records: list[CorpusRecord], profiles: Mapping[str, list[float]],
               model: analytics.RegressionModel | None,
               config: RunConfig) -> list[Path]:
    """Write TSV + SVG plot files for a finished run; returns written paths."""
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(name: str, content: str) -> None:
        path = out / name
        path.write_text(content, encoding="utf-8", newline="\n")
        written.append(path)

    for source, values in sorted(profiles.items()):
        stem = Path(source).with_suffix("").name
        emit(f"{stem}.profile.tsv", plots.profile_tsv(values))
        if values:
            points = list(enumerate(values))
            emit(f"{stem}.profile.svg",
                 plots.line_chart_svg(points, f"Friction trace: {source}",
                                      "window", "friction"))

    records = sorted(records, key=lambda r: r.filename)
    scatter_rows = [(r.filename, r.mean_friction, r.ease) for r in records]
    if scatter_rows:
        emit("ease_vs_friction.tsv", plots.scatter_tsv(scatter_rows))
        fit = (model.intercept, model.slope) if model is not None else None
        emit("ease_vs_friction.svg",
             plots.scatter_chart_svg([(mf, ease) for _, mf, ease in scatter_rows],
                                     "Reading ease vs mean friction",
                                     "mean friction", "ease", fit=fit))

        hist = analytics.histogram([r.stddev for r in records], config.bin_width)
        emit("stddev_histogram.tsv", plots.histogram_tsv(hist.bins))
        emit("stddev_histogram.svg",
             plots.histogram_svg(hist.bins, hist.bin_width,
                                 "Friction standard deviation per text",
                                 "stddev", "texts"))

    compared = [r for r in records if r.predicted_ease == r.predicted_ease]  # drop NaN
    if compared:
        rows = [(r.filename, r.ease, r.predicted_ease) for r in compared]
        emit("ease_comparison.tsv", plots.comparison_tsv(rows))
        emit("ease_comparison.svg",
             plots.bar_chart_svg([r.filename for r in compared],
                                 {"measured": [r.ease for r in compared],
                                  "predicted": [r.predicted_ease for r in compared]},
                                 "Measured vs predicted reading ease",
                                 "text", "ease"))
    return written


# --- corpus fetching -------------------------------------------------------

@dataclass(frozen=True)
class ManifestEntry:
    title: str
    ebook_id: int
    filename: str


def read_manifest(path: Path | str) -> list[ManifestEntry]:
    """Parse a corpus manifest: title <TAB> ebook id <TAB> target filename.

    Blank lines and lines starting with '#' are ignored.
    """
    entries = []
    for line_no, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DomainError(f"{path}:{line_no}: expected 3 tab-separated fields")
        title, raw_id, filename = (p.strip() for p in parts)
        try:
            ebook_id = int(raw_id)
        except ValueError:
            raise DomainError(f"{path}:{line_no}: bad ebook id {raw_id!r}") from None
        entries.append(ManifestEntry(title=title, ebook_id=ebook_id,
                                     filename=filename))
    return entries


def fetch_manifest(manifest_path: Path | str, dest_dir: Path | str,
                   delay_s: float = 2.0,
                   opener: Callable | None = None) -> int:
    """Download manifest entries into dest_dir, skipping files already present.

    Per-item network failures warn and continue; empty downloads are not
    written. A courtesy delay separates consecutive download attempts.
    Returns the number of files fetched.
    """
    if opener is None:
        opener = urllib.request.urlopen
    entries = read_manifest(manifest_path)
    dest = Path(dest_dir)
    dest.mkdir(parents=True, exist_ok=True)
    fetched = 0
    attempts = 0
    for entry in entries:
        target = dest / entry.filename
        if target.exists() and target.stat().st_size > 0:
            log.info("already present: %s", entry.filename)
            continue
        url = GUTENBERG_URL.format(id=entry.ebook_id)
        if attempts and delay_s > 0:
            time.sleep(delay_s)
        attempts += 1
        try:
            with opener(url, timeout=60) as response:
                data = response.read()
        except Exception as exc:  # per-item resilience, never abort the batch
            log.warning("fetch failed for %r (%s): %s", entry.title, url, exc)
            continue
        if not data:
            log.warning("empty download for %r; not written", entry.title)
            continue
        target.write_bytes(data)
        log.info("fetched %s (%d bytes)", entry.filename, len(data))
        fetched += 1
    return fetched
