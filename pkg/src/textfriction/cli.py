"""Command line interface.

    textfriction analyze FILE [options]     one text -> profile + summary
    textfriction batch DIR [options]        corpus -> run data files
    textfriction fetch MANIFEST DEST        download a public-domain corpus
    textfriction plot RUNDIR [options]      run data files -> TSV + SVG charts
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__, corpus
from .errors import DomainError


def _add_analysis_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--width", type=int, default=100,
                        help="surface width in letters (default 100)")
    parser.add_argument("--patch", type=float, default=None,
                        help="patch coefficient (default: table median)")
    parser.add_argument("--strip-gutenberg", action="store_true",
                        help="drop Project Gutenberg boilerplate before analysis")
    parser.add_argument("--encoding", choices=("utf8", "ascii"), default="utf8",
                        help="input encoding (default utf8)")
    parser.add_argument("--out", type=Path, default=Path("."), metavar="DIR",
                        help="output directory (default .)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textfriction",
        description="Sliding-friction text analysis: letter-frequency friction "
                    "profiles and readability scores.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="profile a single text")
    p.add_argument("file", type=Path)
    _add_analysis_flags(p)

    p = sub.add_parser("batch", help="process every .txt in a directory")
    p.add_argument("directory", type=Path)
    _add_analysis_flags(p)
    p.add_argument("--append", action="store_true",
                   help="append to statistics/readability files instead of rewriting")
    p.add_argument("--bin-width", type=float, default=2.0,
                   help="stddev histogram bin width (default 2.0)")

    p = sub.add_parser("fetch", help="download corpus texts from a manifest")
    p.add_argument("manifest", type=Path)
    p.add_argument("dest", type=Path)
    p.add_argument("--delay", type=float, default=2.0,
                   help="seconds between download attempts (default 2)")

    p = sub.add_parser("plot", help="emit TSV and SVG charts for a finished run")
    p.add_argument("rundir", type=Path)
    p.add_argument("--out", type=Path, default=None, metavar="DIR",
                   help="output directory (default: the run directory)")
    p.add_argument("--bin-width", type=float, default=2.0,
                   help="stddev histogram bin width (default 2.0)")
    return parser


def _config(args: argparse.Namespace, input_path: Path) -> corpus.RunConfig:
    return corpus.RunConfig(input_path=input_path, width=args.width,
                            patch=args.patch,
                            strip_boilerplate=args.strip_gutenberg,
                            encoding=args.encoding, out_dir=args.out,
                            bin_width=getattr(args, "bin_width", 2.0),
                            append=getattr(args, "append", False))


def _cmd_analyze(args: argparse.Namespace) -> int:
    record = corpus.analyze_file(args.file, _config(args, args.file))
    # human-facing summary; the .dat files keep full six-decimal precision
    print(f"{record.filename}: mean friction {record.mean_friction:.6f}, "
          f"stddev {record.stddev:.6f}, ease {record.ease:.2f}, "
          f"grade {record.grade:.1f}")
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    records = corpus.batch(_config(args, args.directory))
    print(f"analyzed {len(records)} texts -> {args.out}")
    return 0


def _cmd_fetch(args: argparse.Namespace) -> int:
    fetched = corpus.fetch_manifest(args.manifest, args.dest, delay_s=args.delay)
    print(f"fetched {fetched} files -> {args.dest}")
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    out_dir = args.rundir if args.out is None else args.out
    records, profiles, model = corpus.load_run(args.rundir)
    config = corpus.RunConfig(input_path=args.rundir, out_dir=out_dir,
                              bin_width=args.bin_width)
    written = corpus.emit_plots(records, profiles, model, config)
    print(f"wrote {len(written)} plot files -> {out_dir}")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "batch": _cmd_batch,
    "fetch": _cmd_fetch,
    "plot": _cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
