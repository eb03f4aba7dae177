"""Domain records for one video: cues, shots, entities, and the normalized
VideoRecord every downstream stage consumes.

Ingest is where invariants are enforced: cue/shot/entity times must fit in
[0, duration], speech cues come out sorted and overlap-free (overlapping
cues are merged, not rejected -- real caption files overlap), and shot
boundaries are sorted and deduplicated.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import NonPositiveDuration, OutOfRangeTime


class CueKind(Enum):
    SPEECH = "speech"
    ON_SCREEN_TEXT = "on_screen_text"


@dataclass(frozen=True)
class TimedCue:
    """One caption or on-screen-text line with start/end in milliseconds."""

    start: int
    end: int
    text: str
    kind: CueKind = CueKind.SPEECH

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"cue needs 0 <= start < end, got [{self.start}, {self.end}]")
        if not self.text.strip():
            raise ValueError("cue text is empty")

    def overlap_ms(self, start: int, end: int) -> int:
        return max(0, min(self.end, end) - max(self.start, start))


@dataclass(frozen=True)
class ShotBoundary:
    time: int
    confidence: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"shot confidence must be in [0,1], got {self.confidence}")
        if self.time < 0:
            raise ValueError(f"shot time must be >= 0, got {self.time}")


@dataclass(frozen=True)
class VisualEntityObservation:
    time: int
    label: str

    def __post_init__(self):
        if not self.label.strip():
            raise ValueError("entity label is empty")
        if self.time < 0:
            raise ValueError(f"entity time must be >= 0, got {self.time}")


@dataclass(frozen=True)
class VideoRecord:
    """Validated, normalized inputs for one video."""

    video_id: str
    duration: int  # milliseconds
    title: str = ""
    speech_cues: tuple[TimedCue, ...] = ()
    ocr_cues: tuple[TimedCue, ...] = ()
    shots: tuple[ShotBoundary, ...] = ()
    entities: tuple[VisualEntityObservation, ...] = ()

    def speech_in(self, start: int, end: int) -> list[TimedCue]:
        return [c for c in self.speech_cues if c.overlap_ms(start, end) > 0]

    def ocr_in(self, start: int, end: int) -> list[TimedCue]:
        return [c for c in self.ocr_cues if c.overlap_ms(start, end) > 0]

    def shots_within(self, start: int, end: int) -> list[ShotBoundary]:
        """Shot boundaries in [start, end): the cut into a segment belongs to
        that segment, so cut-delimited slivers still register as unstable."""
        return [s for s in self.shots if start <= s.time < end]

    def entities_in(self, start: int, end: int) -> list[VisualEntityObservation]:
        return [e for e in self.entities if start <= e.time <= end]


def merge_overlapping_cues(cues: Iterable[TimedCue]) -> list[TimedCue]:
    """Sort by start and merge overlapping cues into union intervals, texts
    concatenated with a single space. Touching cues (end == next start) are
    kept separate."""
    ordered = sorted(cues, key=lambda c: (c.start, c.end))
    merged: list[TimedCue] = []
    for cue in ordered:
        if merged and cue.start < merged[-1].end:
            prev = merged[-1]
            merged[-1] = TimedCue(
                start=prev.start,
                end=max(prev.end, cue.end),
                text=f"{prev.text} {cue.text}",
                kind=prev.kind,
            )
        else:
            merged.append(cue)
    return merged


def load_video_record(
    video_id: str,
    duration: int,
    title: str = "",
    captions: Iterable[TimedCue] = (),
    ocr: Iterable[TimedCue] = (),
    shots: Iterable[ShotBoundary] = (),
    entities: Iterable[VisualEntityObservation] = (),
) -> VideoRecord:
    """Build a validated VideoRecord. Raises NonPositiveDuration or
    OutOfRangeTime; overlapping speech cues are merged, shots sorted and
    deduplicated."""
    if duration <= 0:
        raise NonPositiveDuration(f"duration must be > 0 ms, got {duration}")

    speech = merge_overlapping_cues(captions)
    ocr_sorted = sorted(ocr, key=lambda c: (c.start, c.end))

    for cue in (*speech, *ocr_sorted):
        if cue.end > duration:
            raise OutOfRangeTime(f"cue [{cue.start},{cue.end}] exceeds duration {duration}")
    shot_list = sorted({s.time: s for s in shots}.values(), key=lambda s: s.time)
    for shot in shot_list:
        if shot.time > duration:
            raise OutOfRangeTime(f"shot at {shot.time} exceeds duration {duration}")
    entity_list = sorted(entities, key=lambda e: (e.time, e.label))
    for ent in entity_list:
        if ent.time > duration:
            raise OutOfRangeTime(f"entity at {ent.time} exceeds duration {duration}")

    return VideoRecord(
        video_id=video_id,
        duration=duration,
        title=title,
        speech_cues=tuple(speech),
        ocr_cues=tuple(ocr_sorted),
        shots=tuple(shot_list),
        entities=tuple(entity_list),
    )


# --- metadata sidecar ------------------------------------------------------
# One JSON document per video carrying everything that does not come from the
# caption file: {"video_id", "duration_ms", "title", "shots": [{"t_ms",
# "confidence"}], "ocr": [{"start_ms","end_ms","text"}], "entities":
# [{"t_ms","label"}]}. Shot/entity extraction from pixels is out of scope;
# these arrive precomputed.


_VIDEO_ID_RE = re.compile(r"[A-Za-z0-9._~-]+")


def sidecar_from_dict(doc: dict) -> dict:
    """Validate the sidecar JSON shape; returns the dict unchanged."""
    for key in ("video_id", "duration_ms"):
        if key not in doc:
            raise ValueError(f"sidecar missing required key '{key}'")
    video_id = doc["video_id"]
    if not isinstance(video_id, str) or not _VIDEO_ID_RE.fullmatch(video_id):
        # ids travel in URL paths and store keys; keep them path-safe
        raise ValueError("sidecar video_id must match [A-Za-z0-9._~-]+")
    if not isinstance(doc["duration_ms"], int):
        raise ValueError("sidecar duration_ms must be an integer")
    return doc


def record_from_sidecar(doc: dict, captions: Iterable[TimedCue] = ()) -> VideoRecord:
    doc = sidecar_from_dict(doc)
    ocr = [
        TimedCue(item["start_ms"], item["end_ms"], item["text"], CueKind.ON_SCREEN_TEXT)
        for item in doc.get("ocr", [])
    ]
    shots = [ShotBoundary(item["t_ms"], item.get("confidence", 1.0)) for item in doc.get("shots", [])]
    entities = [VisualEntityObservation(item["t_ms"], item["label"]) for item in doc.get("entities", [])]
    return load_video_record(
        video_id=doc["video_id"],
        duration=doc["duration_ms"],
        title=doc.get("title", ""),
        captions=captions,
        ocr=ocr,
        shots=shots,
        entities=entities,
    )


def load_sidecar(path: str | Path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return sidecar_from_dict(json.load(fh))


# --- record <-> JSON (store + wire payloads) -------------------------------


def record_to_payload(record: VideoRecord) -> dict:
    return {
        "video_id": record.video_id,
        "duration_ms": record.duration,
        "title": record.title,
        "speech_cues": [
            {"start_ms": c.start, "end_ms": c.end, "text": c.text} for c in record.speech_cues
        ],
        "ocr": [{"start_ms": c.start, "end_ms": c.end, "text": c.text} for c in record.ocr_cues],
        "shots": [{"t_ms": s.time, "confidence": s.confidence} for s in record.shots],
        "entities": [{"t_ms": e.time, "label": e.label} for e in record.entities],
    }


def record_from_payload(payload: dict) -> VideoRecord:
    return VideoRecord(
        video_id=payload["video_id"],
        duration=payload["duration_ms"],
        title=payload.get("title", ""),
        speech_cues=tuple(
            TimedCue(c["start_ms"], c["end_ms"], c["text"]) for c in payload.get("speech_cues", [])
        ),
        ocr_cues=tuple(
            TimedCue(c["start_ms"], c["end_ms"], c["text"], CueKind.ON_SCREEN_TEXT)
            for c in payload.get("ocr", [])
        ),
        shots=tuple(ShotBoundary(s["t_ms"], s.get("confidence", 1.0)) for s in payload.get("shots", [])),
        entities=tuple(
            VisualEntityObservation(e["t_ms"], e["label"]) for e in payload.get("entities", [])
        ),
    )
