#!/usr/bin/env python3
"""Regenerate tests/fixtures/service.json from live service responses so the
UI tests exercise the exact wire formats. Run from the frontend directory
with the sightline package installed."""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from sightline.analysis import Segment, Tier, analysis_to_payload, VideoAnalysis, label_segments
from sightline.config import AppConfig, ServerConfig
from sightline.service import create_app

ROOT = Path(__file__).resolve().parents[1]
VIDEOS = ROOT.parent / "tests" / "fixtures" / "videos"
OUT = ROOT / "tests" / "fixtures" / "service.json"


def eight_span_analysis() -> dict:
    """Ten segments labeled 5 orange + 3 yellow + 2 unlabeled (span-count fixture)."""
    scores = [0.05, 0.10, 0.15, 0.20, 0.25, 0.70, 0.75, 0.80, 0.90, 0.95]
    reasons = [frozenset()] * 5 + [frozenset({"R1"}), frozenset({"R3"}), frozenset({"R6"})] + [frozenset()] * 2
    segments = [
        Segment("span-fixture", i * 30_000, (i + 1) * 30_000, score=s, reasons=r)
        for i, (s, r) in enumerate(zip(scores, reasons))
    ]
    labeled = label_segments(segments, k=5)
    tiers = [seg.tier for seg in labeled]
    assert tiers.count(Tier.ORANGE) == 5 and tiers.count(Tier.YELLOW) == 3
    return analysis_to_payload(VideoAnalysis("span-fixture", 300_000, tuple(labeled)))


def live_fixtures() -> dict:
    with tempfile.TemporaryDirectory() as tmp:
        cfg = AppConfig(server=ServerConfig(data_dir=tmp))
        with TestClient(create_app(cfg)) as client:
            token = client.post(
                "/users", json={"display_name": "FixtureBot", "password": "pw"}
            ).json()["token"]
            auth = {"Authorization": f"Bearer {token}"}
            for vid, ext in (("bathe-cat-howto", "srt"), ("tigers-doc", "vtt")):
                client.post(
                    "/videos",
                    json={
                        "sidecar": json.loads((VIDEOS / f"{vid}.sidecar.json").read_text()),
                        "captions": {
                            "format": ext,
                            "content": (VIDEOS / f"{vid}.{ext}").read_text(),
                        },
                    },
                    headers=auth,
                )
            cat_analysis = client.get("/videos/bathe-cat-howto/segments").json()
            orange_start = next(
                s["start_ms"] for s in cat_analysis["segments"] if s["tier"] == "orange"
            )
            draft_check = client.post(
                "/videos/bathe-cat-howto/draft-check",
                json={"draft": "this is cool", "playhead_ms": orange_start},
            ).json()
            client.post(
                "/videos/tigers-doc/comments",
                json={"text": "1:29 Green algae swirls in the wake created by a tiger."},
                headers=auth,
            )
            client.post(
                "/videos/tigers-doc/comments",
                json={"text": "1:25 the tiger slips into the green water quietly"},
                headers=auth,
            )
            manifest = client.get("/videos/tigers-doc/playback-manifest").json()
            accessible = client.get("/videos/tigers-doc/accessible-comments").json()
            onboarding_intro = client.get("/onboarding/intro").json()
            onboarding_manual = client.get("/onboarding/manual").json()
    return {
        "cat_analysis": cat_analysis,
        "draft_check_this_is_cool": draft_check,
        "draft_check_playhead_ms": orange_start,
        "tiger_manifest": manifest,
        "tiger_accessible": accessible,
        "onboarding_intro": onboarding_intro,
        "onboarding_manual": onboarding_manual,
    }


def main() -> None:
    fixtures = {"eight_span_analysis": eight_span_analysis(), **live_fixtures()}
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(fixtures, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
