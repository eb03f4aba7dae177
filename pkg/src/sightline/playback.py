"""Accessibility-mode playback manifest: beep points and per-segment
comment read-out for blind and low-vision viewers.

A beep fires at the end of every segment that has at least one curated
comment; playback pauses there by default so the viewer can navigate the
comments with Shift and resume with Space (matching the player's native
shortcuts). Read-out text has the timestamp token stripped -- the reader
already has temporal context.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import VideoAnalysis
from .comments import Comment
from .curation import accessible_order
from .errors import VideoNotAnalyzed
from .textutils import strip_timestamps


@dataclass(frozen=True)
class BeepEvent:
    at_ms: int             # the owning segment's end time
    segment_ref: int       # index into the analysis segment list
    comment_ids: tuple[str, ...]   # anchor asc, then created_at asc
    readout: tuple[str, ...]       # timestamp-stripped texts, same order


@dataclass(frozen=True)
class PlaybackManifest:
    video_id: str
    auto_pause: bool
    events: tuple[BeepEvent, ...]


def readout_text(comment_text: str) -> str:
    return strip_timestamps(comment_text)


def build_manifest(
    analysis: VideoAnalysis | None,
    accepted_comments: list[Comment],
    auto_pause: bool = True,
) -> PlaybackManifest:
    """Group accepted comments by containing segment and emit one beep per
    non-empty segment, ordered by time. Anchors on a segment boundary go to
    the earlier segment."""
    if analysis is None:
        raise VideoNotAnalyzed("playback manifest needs a completed video analysis")

    by_segment: dict[int, list[Comment]] = {}
    for comment in accepted_comments:
        if comment.anchor is None:
            continue  # curation never admits these; defensive skip
        idx = analysis.segment_index_for_anchor(comment.anchor)
        by_segment.setdefault(idx, []).append(comment)

    events = []
    for idx in sorted(by_segment):
        ordered = accessible_order(by_segment[idx])
        events.append(
            BeepEvent(
                at_ms=analysis.segments[idx].end,
                segment_ref=idx,
                comment_ids=tuple(c.comment_id for c in ordered),
                readout=tuple(readout_text(c.raw_text) for c in ordered),
            )
        )
    return PlaybackManifest(analysis.video_id, auto_pause, tuple(events))


def keyboard_contract() -> dict[str, str]:
    """The closed accessibility-mode key-binding table, served to the UI so
    bindings live in one place."""
    return {
        "Shift": "next_comment",           # advances the read-out cursor, wraps
        "Space": "exit_readout_and_resume",  # leaves read-out, resumes playback
    }


def manifest_to_payload(manifest: PlaybackManifest) -> dict:
    return {
        "video_id": manifest.video_id,
        "auto_pause": manifest.auto_pause,
        "events": [
            {
                "at_ms": ev.at_ms,
                "segment_ref": ev.segment_ref,
                "comment_ids": list(ev.comment_ids),
                "readout": list(ev.readout),
            }
            for ev in manifest.events
        ],
        "keyboard": keyboard_contract(),
    }
