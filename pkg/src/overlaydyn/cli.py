"""Command-line entry point: ``overlaydyn {expand,series,overlay-export}``.

Exit codes: 0 success, 2 input error, 3 internal invariant violation.
The log level is read from ``OVERLAYDYN_LOG`` (default WARNING).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .basemap import load_basemap
from .corpus import (
    build_citation_graph,
    citing_set,
    cohort,
    cumulative_cohort,
    ingest_corpus,
    snowball_expand,
    write_corpus,
)
from .dynamics import Mode, SliceSpec, compute_series
from .errors import InvariantViolation, OverlayDynError
from .export import write_overlay_graphml, write_series_svg
from .overlay import build_overlay, write_profile_csv

logger = logging.getLogger("overlaydyn")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(OverlayDynError):
    pass


def _thresholds(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad threshold list {text!r}") from None
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError("thresholds must be positive integers, e.g. 3,10")
    return values


def _years(text):
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YMIN:YMAX, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty year range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", required=True, type=Path, help="JSON-lines corpus file")
    common.add_argument("--out", required=True, type=Path, help="output directory")

    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument("--basemap", required=True, type=Path, help="basemap CSV (cat_a,cat_b,value)")
    analysis.add_argument("--basemap-mode", choices=("distance", "similarity"), default="similarity")
    analysis.add_argument("--counting", choices=("fractional", "whole"), default="fractional")
    analysis.add_argument("--years", type=_years, help="YMIN:YMAX (default: corpus range)")
    analysis.add_argument(
        "--exclude-self-citing-overlap",
        action="store_true",
        help="drop source documents from the citing side",
    )

    parser = argparse.ArgumentParser(prog="overlaydyn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="snowball corpus expansion")
    p.add_argument("--seeds", required=True, type=Path, help="file with one seed doc id per line")
    p.add_argument("--thresholds", type=_thresholds, default=[3, 10, 10])
    p.add_argument("--max-generations", type=int, default=10)

    p = sub.add_parser("series", parents=[common, analysis], help="yearly MOD/ODR series")
    p.add_argument("--mode", required=True, choices=[m.cli_name for m in Mode])
    p.add_argument("--workers", type=int, default=1, help="threads for per-year work")

    p = sub.add_parser("overlay-export", parents=[common, analysis], help="profile CSV + GraphML")
    p.add_argument("--year", required=True, type=int)
    p.add_argument("--side", required=True, choices=("cited", "citing"))
    p.add_argument("--cumulative", action="store_true")
    return parser


def _prepare_out(path: Path):
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_expand(args) -> int:
    store = ingest_corpus(args.corpus)
    seeds = [line.strip() for line in args.seeds.read_text(encoding="utf-8").splitlines()]
    seeds = [s for s in seeds if s]
    if not seeds:
        raise InputError(f"{args.seeds}: empty seed list")
    corpus_ids, report = snowball_expand(store, seeds, args.thresholds, args.max_generations)

    out = _prepare_out(args.out)
    report.write_csv(out / "expansion_report.csv")
    write_corpus((d for d in store.records() if d.doc_id in corpus_ids), out / "corpus_expanded.jsonl")
    meta = {
        "thresholds": list(report.thresholds),
        "max_generations": args.max_generations,
        "n_seeds": len(set(seeds)),
        "converged": report.converged,
        "total": report.total,
    }
    (out / "expansion_meta.json").write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    print(f"expanded {len(set(seeds))} seeds to {report.total} documents in {len(report.rows)} generation(s)")
    return EXIT_OK


def _load_inputs(args):
    basemap = load_basemap(args.basemap, args.basemap_mode)
    store = ingest_corpus(args.corpus)
    # fail fast, naming every category the basemap lacks
    basemap.check_known(store.categories())
    return basemap, store


def cmd_series(args) -> int:
    basemap, store = _load_inputs(args)
    if not len(store) and args.years is None:
        raise InputError(f"{args.corpus}: corpus is empty; pass --years to emit an all-undefined series")
    spec = SliceSpec.for_corpus(
        args.mode,
        store,
        args.years,
        counting=args.counting,
        exclude_self_citing_overlap=args.exclude_self_citing_overlap,
    )
    graph = None if spec.mode is Mode.TYPE_B else build_citation_graph(store)
    series = compute_series(store, graph, basemap, spec, workers=args.workers)

    out = _prepare_out(args.out)
    stem = f"series_{spec.mode.cli_name}"
    series.write_csv(out / f"{stem}.csv")
    write_series_svg(series, out / f"{stem}.svg")
    n_undef = sum(r.status != "ok" for r in series.rows)
    print(f"wrote {len(series)} rows ({n_undef} with undefined measures) to {out / stem}.csv")
    return EXIT_OK


def cmd_overlay_export(args) -> int:
    basemap, store = _load_inputs(args)
    source = (cumulative_cohort if args.cumulative else cohort)(store, args.year)
    if args.side == "cited":
        ids = source
    else:
        ids = citing_set(build_citation_graph(store), source)
        if args.exclude_self_citing_overlap:
            ids -= source
    profile = build_overlay((store[i] for i in sorted(ids)), basemap, args.counting)

    out = _prepare_out(args.out)
    stem = f"overlay_{args.side}_{args.year}" + ("_cumulative" if args.cumulative else "")
    write_profile_csv(profile, out / f"{stem}.csv")
    if profile.is_empty:
        reason = "no documents" if not ids else "no categorized documents"
        (out / f"{stem}.empty").write_text(
            f"empty profile: {reason} on the {args.side} side for {args.year}\n", encoding="utf-8"
        )
        print(f"{stem}: empty profile ({reason})")
        return EXIT_OK
    write_overlay_graphml(profile, basemap, out / f"{stem}.graphml")
    print(f"{stem}: {profile.support_size} categories from {profile.doc_count} documents")
    return EXIT_OK


COMMANDS = {"expand": cmd_expand, "series": cmd_series, "overlay-export": cmd_overlay_export}


def main(argv=None) -> int:
    level = getattr(logging, os.environ.get("OVERLAYDYN_LOG", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(
        level=level if isinstance(level, int) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (OverlayDynError, OSError) as exc:
        print(f"overlaydyn: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"overlaydyn: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
