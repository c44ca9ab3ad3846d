#!/usr/bin/env python3
"""Run the full experiment on a corpus directory: batch analysis plus charts.

Usage: python scripts/run_corpus.py CORPUS_DIR [OUT_DIR] [--strip-gutenberg] ...
"""

import argparse
import logging
import sys
from pathlib import Path

from textfriction import corpus


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("corpus_dir", type=Path)
    parser.add_argument("out_dir", nargs="?", type=Path, default=Path("run"))
    parser.add_argument("--width", type=int, default=100)
    parser.add_argument("--patch", type=float, default=None)
    parser.add_argument("--strip-gutenberg", action="store_true")
    parser.add_argument("--encoding", choices=("utf8", "ascii"), default="utf8")
    parser.add_argument("--bin-width", type=float, default=2.0)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")

    config = corpus.RunConfig(input_path=args.corpus_dir, width=args.width,
                              patch=args.patch,
                              strip_boilerplate=args.strip_gutenberg,
                              encoding=args.encoding, out_dir=args.out_dir,
                              bin_width=args.bin_width)
    records = corpus.batch(config)
    print(f"analyzed {len(records)} texts")
    for record in records:
        print(f"  {record.filename}: mean friction {record.mean_friction:.6f}, "
              f"stddev {record.stddev:.6f}, ease {record.ease:.2f}, "
              f"grade {record.grade:.1f}")

    loaded, profiles, model = corpus.load_run(args.out_dir)
    written = corpus.emit_plots(loaded, profiles, model, config)
    print(f"wrote {len(written)} plot files -> {args.out_dir}")
    if model is not None:
        print(f"fit: ease = {model.intercept:.6f} + {model.slope:.6f} * MF "
              f"(r = {model.r:.6f}, n = {model.n})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
