"""Shared fixtures: the 8-video caption corpus and small prebuilt records."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from sightline.analysis import analyze
from sightline.captions import load_caption_file
from sightline.config import AnalysisConfig
from sightline.ingest import (
    ShotBoundary,
    TimedCue,
    load_sidecar,
    load_video_record,
    record_from_sidecar,
)

FIXTURES = Path(__file__).parent / "fixtures"
VIDEO_DIR = FIXTURES / "videos"


def load_fixture_record(video_id: str):
    sidecar = load_sidecar(VIDEO_DIR / f"{video_id}.sidecar.json")
    caption_path = None
    for ext in (".srt", ".vtt"):
        candidate = VIDEO_DIR / f"{video_id}{ext}"
        if candidate.exists():
            caption_path = candidate
            break
    cues = load_caption_file(caption_path) if caption_path else []
    return record_from_sidecar(sidecar, cues)


@pytest.fixture(scope="session")
def video_dir() -> Path:
    return VIDEO_DIR


@pytest.fixture(scope="session")
def corpus_ids() -> list[str]:
    return sorted(p.name[: -len(".sidecar.json")] for p in VIDEO_DIR.glob("*.sidecar.json"))


@pytest.fixture(scope="session")
def cat_record():
    return load_fixture_record("bathe-cat-howto")


@pytest.fixture(scope="session")
def cat_analysis(cat_record):
    return analyze(cat_record, AnalysisConfig())


@pytest.fixture(scope="session")
def tiger_record():
    return load_fixture_record("tigers-doc")


@pytest.fixture(scope="session")
def tiger_analysis(tiger_record):
    return analyze(tiger_record, AnalysisConfig())


@pytest.fixture()
def tiny_record():
    """10s video: speech on [0,4000] and [6000,9000], one shot, one entity."""
    return load_video_record(
        video_id="tiny",
        duration=10_000,
        captions=[
            TimedCue(0, 4000, "A striped tiger walks across the bright river stones"),
            TimedCue(6000, 9000, "The camera follows it from the far bank"),
        ],
        shots=[ShotBoundary(5000, 0.8)],
    )


@pytest.fixture(scope="session")
def comment_corpus() -> dict:
    path = Path(__file__).parents[1] / "src" / "sightline" / "data" / "comment_corpus.json"
    return json.loads(path.read_text(encoding="utf-8"))
