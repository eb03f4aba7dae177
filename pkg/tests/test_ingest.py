"""VideoRecord construction: merging, validation, sidecar loading."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sightline.errors import NonPositiveDuration, OutOfRangeTime
from sightline.ingest import (
    ShotBoundary,
    TimedCue,
    VisualEntityObservation,
    load_video_record,
    record_from_payload,
    record_from_sidecar,
    record_to_payload,
)


def test_overlapping_cues_merged_union_interval_texts_joined():
    record = load_video_record(
        "v", 10_000, captions=[TimedCue(0, 2000, "a"), TimedCue(1000, 3000, "b")]
    )
    assert record.speech_cues == (TimedCue(0, 3000, "a b"),)


def test_touching_cues_not_merged():
    record = load_video_record(
        "v", 10_000, captions=[TimedCue(0, 1000, "a"), TimedCue(1000, 2000, "b")]
    )
    assert len(record.speech_cues) == 2


def test_empty_captions_valid_record():
    record = load_video_record("v", 60_000)
    assert record.speech_cues == () and record.duration == 60_000


def test_shot_beyond_duration_rejected():
    with pytest.raises(OutOfRangeTime):
        load_video_record("v", 60_000, shots=[ShotBoundary(70_000)])


def test_cue_beyond_duration_rejected():
    with pytest.raises(OutOfRangeTime):
        load_video_record("v", 5_000, captions=[TimedCue(4_000, 6_000, "late")])


def test_entity_beyond_duration_rejected():
    with pytest.raises(OutOfRangeTime):
        load_video_record("v", 5_000, entities=[VisualEntityObservation(9_000, "cat")])


def test_non_positive_duration_rejected():
    with pytest.raises(NonPositiveDuration):
        load_video_record("v", 0)


def test_cue_invariants_enforced():
    with pytest.raises(ValueError):
        TimedCue(5, 5, "zero length")
    with pytest.raises(ValueError):
        TimedCue(0, 5, "   ")
    with pytest.raises(ValueError):
        ShotBoundary(1000, confidence=1.5)
    with pytest.raises(ValueError):
        VisualEntityObservation(1000, "  ")


def test_shots_sorted_and_deduplicated():
    record = load_video_record(
        "v", 10_000, shots=[ShotBoundary(5000), ShotBoundary(2000), ShotBoundary(5000)]
    )
    assert [s.time for s in record.shots] == [2000, 5000]


@st.composite
def _raw_cues(draw):
    cues = []
    for _ in range(draw(st.integers(0, 15))):
        start = draw(st.integers(0, 50_000))
        end = start + draw(st.integers(1, 20_000))
        cues.append(TimedCue(start, end, "x"))
    return cues


@given(_raw_cues())
def test_merged_speech_is_sorted_and_overlap_free(cues):
    record = load_video_record("v", 100_000, captions=cues)
    merged = record.speech_cues
    for a, b in zip(merged, merged[1:]):
        assert a.start <= b.start
        assert a.end <= b.start  # no overlap survives ingest
    # merging never loses covered time
    def covered(cs):
        marks = set()
        for c in cs:
            marks.update(range(c.start // 100, c.end // 100))
        return marks
    assert covered(cues) == covered(merged)


def test_sidecar_round_trip(tiny_record):
    payload = record_to_payload(tiny_record)
    assert record_from_payload(payload) == tiny_record


def test_record_from_sidecar_validates():
    with pytest.raises(ValueError):
        record_from_sidecar({"duration_ms": 1000})
    record = record_from_sidecar(
        {
            "video_id": "s",
            "duration_ms": 10_000,
            "title": "t",
            "shots": [{"t_ms": 4000, "confidence": 0.5}],
            "ocr": [{"start_ms": 0, "end_ms": 2000, "text": "HELLO"}],
            "entities": [{"t_ms": 1000, "label": "cat"}],
        }
    )
    assert record.ocr_cues[0].text == "HELLO"
    assert record.shots[0].confidence == 0.5


def test_video_id_must_be_path_safe():
    with pytest.raises(ValueError):
        record_from_sidecar({"video_id": "a/b", "duration_ms": 1000})
    with pytest.raises(ValueError):
        record_from_sidecar({"video_id": "", "duration_ms": 1000})
    record = record_from_sidecar({"video_id": "ok-id_1.x~2", "duration_ms": 1000})
    assert record.video_id == "ok-id_1.x~2"
