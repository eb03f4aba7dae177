"""Operator tooling: offline corpus analysis, classifier evaluation against
the labeled comment corpus, and the service runner.

Exit codes: 0 success, 1 configuration/threshold failure, 2 per-file input
failures (diagnostics on stderr). Machine-readable output is JSON by
default so CI can consume it.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from . import __version__
from .analysis import analysis_to_payload, analyze
from .captions import load_caption_file
from .comments import Category, classify_comment, parse_anchor
from .config import AppConfig, load_config, validate_config
from .errors import SightlineError
from .ingest import load_sidecar, record_from_sidecar

_SIDECAR_SUFFIX = ".sidecar.json"

# agreement thresholds the evaluator enforces (exit 1 below either)
ANCHOR_ACCURACY_FLOOR = 1.0
CATEGORY_AGREEMENT_FLOOR = 0.80


def _canonical(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=False) + "\n"


def _discover_videos(paths: list[str]) -> list[tuple[str, Path, Path | None]]:
    """(video stem, sidecar path, caption path or None) triples, sorted by stem."""
    sidecars: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            sidecars.extend(sorted(p.glob(f"*{_SIDECAR_SUFFIX}")))
        elif p.name.endswith(_SIDECAR_SUFFIX):
            sidecars.append(p)
        else:
            raise SightlineError(f"{p}: expected a directory or a *{_SIDECAR_SUFFIX} file")
    out = []
    for sc in sidecars:
        stem = sc.name[: -len(_SIDECAR_SUFFIX)]
        caption = None
        for ext in (".srt", ".vtt"):
            candidate = sc.with_name(stem + ext)
            if candidate.exists():
                caption = candidate
                break
        out.append((stem, sc, caption))
    return sorted(out, key=lambda item: item[0])


def _analyze_one(sidecar_path: Path, caption_path: Path | None, config: AppConfig) -> dict:
    cues = load_caption_file(caption_path) if caption_path else []
    record = record_from_sidecar(load_sidecar(sidecar_path), cues)
    return analysis_to_payload(analyze(record, config.analysis))


def cmd_analyze(args: argparse.Namespace, config: AppConfig) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        videos = _discover_videos(args.paths)
    except SightlineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    failures = 0
    results: list[tuple[str, dict | Exception]] = []

    def run(item):
        stem, sidecar_path, caption_path = item
        try:
            return stem, _analyze_one(sidecar_path, caption_path, config)
        except Exception as exc:
            return stem, exc

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(run, videos))

    # deterministic output ordering regardless of completion order
    for stem, outcome in sorted(results, key=lambda r: r[0]):
        if isinstance(outcome, Exception):
            failures += 1
            print(f"{stem}: {outcome}", file=sys.stderr)
            continue
        out_path = out_dir / f"{outcome['video_id']}.analysis.json"
        out_path.write_text(_canonical(outcome), encoding="utf-8")
        if args.format == "text":
            tiers = {"orange": 0, "yellow": 0, "none": 0}
            for seg in outcome["segments"]:
                tiers[seg["tier"]] += 1
            print(
                f"{outcome['video_id']}: {len(outcome['segments'])} segments "
                f"(orange {tiers['orange']}, yellow {tiers['yellow']}, unlabeled {tiers['none']})"
            )
    if args.format == "json":
        print(json.dumps({"analyzed": len(results) - failures, "failed": failures}))
    return 2 if failures else 0


def _default_corpus() -> dict:
    return json.loads(
        resources.files("sightline").joinpath("data/comment_corpus.json").read_text("utf-8")
    )


def evaluate_corpus(corpus: dict) -> dict:
    """Score anchor detection and category agreement against hand labels."""
    rows = corpus["comments"]
    anchor_hits = 0
    category_hits = 0
    per_category: dict[str, int] = {c.value: 0 for c in Category}
    disagreements = []
    for row in rows:
        anchored = parse_anchor(row["text"], duration=None)
        got_anchor = anchored[0] if anchored else None
        if got_anchor == row["expected_anchor_ms"]:
            anchor_hits += 1
        got_category = classify_comment(row["text"]).value
        per_category[got_category] += 1
        if got_category == row["expected_category"]:
            category_hits += 1
        else:
            disagreements.append(
                {
                    "text": row["text"],
                    "expected": row["expected_category"],
                    "got": got_category,
                }
            )
    n = len(rows)
    return {
        "comments": n,
        "anchor_accuracy": (anchor_hits / n) if n else 1.0,
        "category_agreement": (category_hits / n) if n else 1.0,
        "category_counts": per_category,
        "disagreements": disagreements,
    }


def cmd_eval_comments(args: argparse.Namespace, _config: AppConfig) -> int:
    try:
        if args.fixture:
            corpus = json.loads(Path(args.fixture).read_text(encoding="utf-8"))
        else:
            corpus = _default_corpus()
        report = evaluate_corpus(corpus)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"fixture error: {exc!r}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report, ensure_ascii=False, indent=2))
    else:
        print(f"comments evaluated: {report['comments']}")
        print(f"anchor accuracy:    {report['anchor_accuracy']:.1%}")
        print(f"category agreement: {report['category_agreement']:.1%}")
        for item in report["disagreements"]:
            print(f"  disagrees ({item['expected']} vs {item['got']}): {item['text'][:60]}")
    if report["comments"] == 0:
        return 0
    if report["anchor_accuracy"] < ANCHOR_ACCURACY_FLOOR:
        return 1
    if report["category_agreement"] < CATEGORY_AGREEMENT_FLOOR:
        return 1
    return 0


def cmd_serve(args: argparse.Namespace, config: AppConfig) -> int:
    problems = validate_config(config)
    if problems:
        for p in problems:
            print(f"config error: {p}", file=sys.stderr)
        return 1
    if args.check:
        print("config ok")
        return 0

    import uvicorn

    from .service import create_app

    app = create_app(config)
    print(f"sightline listening on {config.server.host}:{config.server.port}")
    try:
        uvicorn.run(app, host=config.server.host, port=config.server.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"serve failed: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sightline", description=__doc__)
    parser.add_argument("--version", action="version", version=f"sightline {__version__}")
    parser.add_argument("--config", default=None, help="path to a TOML config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze caption+sidecar corpora offline")
    p_an.add_argument("paths", nargs="+", help="video directories or *.sidecar.json files")
    p_an.add_argument("--out-dir", required=True, help="directory for *.analysis.json outputs")
    p_an.add_argument("--format", choices=("json", "text"), default="json")
    p_an.add_argument("--jobs", type=int, default=4, help="parallel analysis workers")
    p_an.set_defaults(func=cmd_analyze)

    p_ev = sub.add_parser("eval-comments", help="evaluate the comment classifier against labels")
    p_ev.add_argument("fixture", nargs="?", default=None, help="labeled corpus JSON (default: shipped corpus)")
    p_ev.add_argument("--format", choices=("json", "text"), default="json")
    p_ev.set_defaults(func=cmd_eval_comments)

    p_sv = sub.add_parser("serve", help="run the HTTP service")
    p_sv.add_argument("--check", action="store_true", help="validate config and exit")
    p_sv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    return args.func(args, config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
