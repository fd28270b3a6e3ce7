"""Command-line interface.

Subcommands mirror the three stages of the experimental flow: ``catalog
validate`` (check an ISA catalog), ``profile`` (extract one application's
instruction profile) and ``analyze`` (run the intra-/inter-domain
experiments and write reports, plot data and figures).  ``fixtures``
generates the bundled synthetic corpora so the other commands have
something to chew on.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 internal
consistency error.  Diagnostics are single lines prefixed ``error:``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .catalog import load_catalog
from .errors import MasipError, UsageError
from .experiments import ExperimentConfig, run_inter, run_intra
from .figures import render_suite_figure
from .fixtures import ARCHS, build_inter_corpus, build_intra_corpus
from .ingest import MODES, build_profile
from .report import emit_table, plot_data_csv
from .errors import ConsistencyError


class _Parser(argparse.ArgumentParser):
    """argparse maps its own errors to exit code 2; we use 1 for usage."""

    def error(self, message):
        raise UsageError(message)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _error_line(message) -> str:
    text = " ".join(str(message).split()) or "unknown error"
    if sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        return f"\x1b[31merror:\x1b[0m {text}"
    return f"error: {text}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="masip", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version=f"masip {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="catalog inspection commands")
    catalog_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    p_validate = catalog_sub.add_parser("validate", help="load and validate a catalog file")
    p_validate.add_argument("path", help="catalog file")

    p_profile = sub.add_parser("profile", help="build one application's instruction profile")
    p_profile.add_argument("asm", nargs="+", help="assembly listing files")
    p_profile.add_argument("--catalog", required=True, help="catalog file")
    p_profile.add_argument("--mode", choices=MODES, default="lenient")
    p_profile.add_argument("--app", required=True, help="application identifier")
    p_profile.add_argument("--domain", required=True, help="domain identifier")
    p_profile.add_argument("--out", help="output JSON path (stdout when omitted)")

    p_analyze = sub.add_parser("analyze", help="run experiments from a config file")
    p_analyze.add_argument("--config", required=True, help="experiment config JSON")
    p_analyze.add_argument("--kind", choices=("intra", "inter", "both"), default="both")
    p_analyze.add_argument("--out-dir", help="directory for result files")
    p_analyze.add_argument("--table-format", choices=("csv", "markdown", "both"), default="csv")
    p_analyze.add_argument(
        "--figures",
        choices=("png", "svg", "none"),
        default="png",
        help="figure format rendered next to the data files",
    )

    p_fixtures = sub.add_parser("fixtures", help="generate the bundled synthetic corpora")
    p_fixtures.add_argument("--arch", choices=ARCHS, required=True)
    p_fixtures.add_argument("--out-dir", required=True)

    return parser


def cmd_catalog_validate(args) -> int:
    catalog = load_catalog(args.path)
    print(f"{catalog.name}: {len(catalog.mnemonics)} mnemonics, {len(catalog.aliases)} aliases")
    return 0


def cmd_profile(args) -> int:
    profile = build_profile(args.app, args.domain, args.asm, load_catalog(args.catalog), args.mode)
    if profile.unknown:
        shown = ", ".join(sorted(profile.unknown)[:8])
        more = len(profile.unknown) - 8
        if more > 0:
            shown += f", ... ({more} more)"
        _warn(f"{len(profile.unknown)} unknown mnemonics ignored: {shown}")
    if not profile.used:
        _warn(f"profile {args.domain}/{args.app} contains no recognized instructions")
    text = json.dumps(profile.to_json_dict(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


_TABLE_SUFFIX = {"csv": "csv", "markdown": "md"}


def cmd_analyze(args) -> int:
    config = ExperimentConfig.from_file(args.config)
    kinds = ("intra", "inter") if args.kind == "both" else (args.kind,)
    suites = {}
    for kind in kinds:
        suites[kind] = run_intra(config) if kind == "intra" else run_inter(config)

    if args.out_dir is None:
        if len(kinds) > 1:
            raise UsageError("--out-dir is required with --kind both")
        print(suites[kinds[0]].to_json(), end="")
        return 0

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for kind in kinds:
        suite = suites[kind]
        path = out_dir / f"{kind}_suite.json"
        path.write_text(suite.to_json(), encoding="utf-8")
        written.append(path)
        formats = ("csv", "markdown") if args.table_format == "both" else (args.table_format,)
        for fmt in formats:
            path = out_dir / f"{kind}_table.{_TABLE_SUFFIX[fmt]}"
            path.write_text(emit_table(suite, fmt), encoding="utf-8")
            written.append(path)
        path = out_dir / f"{kind}_plot.csv"
        path.write_text(plot_data_csv(suite), encoding="utf-8")
        written.append(path)
        if args.figures != "none":
            written.append(render_suite_figure(suite, out_dir / f"{kind}_figure.{args.figures}"))
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_fixtures(args) -> int:
    out_dir = Path(args.out_dir)
    for kind, builder in (("intra", build_intra_corpus), ("inter", build_inter_corpus)):
        config = builder(args.arch, out_dir / kind)
        print(f"wrote {config}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "catalog":
            return cmd_catalog_validate(args)
        if args.command == "profile":
            return cmd_profile(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "fixtures":
            return cmd_fixtures(args)
        raise ConsistencyError(f"unhandled command {args.command!r}")
    except MasipError as exc:
        print(_error_line(exc), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
