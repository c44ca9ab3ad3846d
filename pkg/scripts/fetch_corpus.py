#!/usr/bin/env python3
"""Download the bundled 32-text public-domain corpus.

Usage: python scripts/fetch_corpus.py [DEST] [--manifest PATH] [--delay S]
"""

import argparse
import logging
import sys
from importlib import resources
from pathlib import Path

from textfriction import corpus


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("dest", nargs="?", type=Path, default=Path("corpus"),
                        help="download directory (default ./corpus)")
    parser.add_argument("--manifest", type=Path, default=None,
                        help="manifest TSV (default: the bundled one)")
    parser.add_argument("--delay", type=float, default=2.0,
                        help="seconds between download attempts (default 2)")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")

    if args.manifest is not None:
        fetched = corpus.fetch_manifest(args.manifest, args.dest, delay_s=args.delay)
    else:
        bundled = resources.files("textfriction").joinpath(
            "data/gutenberg_manifest.tsv")
        with resources.as_file(bundled) as manifest:
            fetched = corpus.fetch_manifest(manifest, args.dest, delay_s=args.delay)
    print(f"fetched {fetched} files -> {args.dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
