"""Synthetic single-reason records: each triggers exactly one of R1..R7 on
its interval. Shared by the unit tests and the acceptance suite."""

from __future__ import annotations

from sightline.ingest import (
    ShotBoundary,
    TimedCue,
    VideoRecord,
    VisualEntityObservation,
    load_video_record,
)

INTERVAL = (0, 10_000)


def _rec(video_id: str, **kwargs) -> VideoRecord:
    return load_video_record(video_id, 10_000, **kwargs)


def single_reason_records() -> dict[str, VideoRecord]:
    """code -> record whose INTERVAL triggers exactly that reason."""
    return {
        "R1": _rec("only-r1"),
        "R2": _rec(
            "only-r2",
            captions=[TimedCue(0, 10_000, "and so of the to a in on very much more just quite")],
        ),
        "R3": _rec(
            "only-r3",
            captions=[TimedCue(0, 10_000, "bright tigers swim across rivers hunting quietly near reeds")],
            shots=[ShotBoundary(2000), ShotBoundary(5000), ShotBoundary(8000)],
        ),
        "R4": _rec(
            "only-r4",
            captions=[TimedCue(0, 10_000, "a cat chases a dog near a tree with a ball beside a car")],
            entities=[
                VisualEntityObservation(1000, "cat"),
                VisualEntityObservation(3000, "dog"),
                VisualEntityObservation(5000, "tree"),
                VisualEntityObservation(7000, "ball"),
                VisualEntityObservation(9000, "car"),
            ],
        ),
        "R5": _rec(
            "only-r5",
            captions=[TimedCue(0, 10_000, "she cooks dinner slowly tonight for friends")],
            entities=[VisualEntityObservation(2000, "pan"), VisualEntityObservation(6000, "foil")],
        ),
        "R6": _rec(
            "only-r6",
            captions=[TimedCue(0, 10_000, "the chef stirs tomato soup gently in the copper pot")],
            ocr=[TimedCue(2000, 4000, "SUBSCRIBE NOW")],
        ),
        "R7": _rec(
            "only-r7",
            captions=[TimedCue(0, 10_000, "put it on the tray carefully please")],
        ),
    }
