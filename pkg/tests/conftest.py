"""Shared fixtures: coefficient table, synthetic corpora, real-corpus lookup."""

import os
from pathlib import Path

import pytest

from textfriction.coefficients import build_table

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
GOLDEN_DIR = DATA_DIR / "golden"

# The synthetic 3-file corpus behind the golden files. Each text's friction
# and readability numbers are hand-derivable: qq.txt fills exactly one window
# with coefficient-1.0 letters; step.txt is a q-block over an e-block so the
# profile decays linearly; mat.txt repeats one six-word monosyllabic sentence.
SYNTHETIC_FILES = {
    "mat.txt": b"The cat sat on the mat. " * 700,
    "qq.txt": b"q" * 10_000,
    "step.txt": b"q" * 10_000 + b"e" * 5_000,
}


@pytest.fixture(scope="session")
def table():
    return build_table()


@pytest.fixture
def synthetic_corpus(tmp_path):
    src = tmp_path / "corpus"
    src.mkdir()
    for name, data in SYNTHETIC_FILES.items():
        (src / name).write_bytes(data)
    return src


def corpus_dir() -> Path | None:
    """Directory of real public-domain texts, if the user fetched one.

    Checked in order: $TEXTFRICTION_CORPUS, then tests/corpus/. The texts are
    not checked in; populate with `python scripts/fetch_corpus.py tests/corpus`.
    """
    env = os.environ.get("TEXTFRICTION_CORPUS")
    candidates = [Path(env)] if env else []
    candidates.append(TESTS_DIR / "corpus")
    for cand in candidates:
        if cand.is_dir() and any(cand.glob("*.txt")):
            return cand
    return None


def require_corpus(*filenames: str) -> Path:
    found = corpus_dir()
    if found is None:
        pytest.skip("real-text corpus not present; run "
                    "`python scripts/fetch_corpus.py tests/corpus` (needs network)")
    missing = [name for name in filenames if not (found / name).is_file()]
    if missing:
        pytest.skip(f"corpus at {found} is missing: {', '.join(missing)}")
    return found
