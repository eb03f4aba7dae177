"""Timeline gap analysis: segmentation, visual-accessibility scoring,
two-tier labeling, reason detection, and describing hints.

The scoring interface is pluggable: the shipped heuristic scorer is a
near-instant stand-in for heavyweight cross-modal models. The score
direction is fixed -- a segment whose visuals are not described by the
audio scores LOW (0.0 worst, 1.0 best).
"""

from __future__ import annotations

import re
import threading
from bisect import bisect_left
from dataclasses import dataclass, replace
from enum import Enum
from typing import Protocol, Sequence

from .config import AnalysisConfig
from .errors import HintOnUnlabeledSegment
from .ingest import VideoRecord
from .textutils import stopword_ratio, stopwords, tokens

Interval = tuple[int, int]

# Reference words whose antecedent must appear earlier in the same cue.
_REFERENCE_WORDS = frozenset({"it", "this", "that", "these", "those"})


@dataclass(frozen=True)
class AccessibilityReason:
    """One reason a segment may be inaccessible, with its describing hint."""

    code: str   # "R1".."R7"
    name: str   # short reason name shown in the hint pop-up
    hint: str   # actionable describing hint, served verbatim


REASONS: dict[str, AccessibilityReason] = {
    r.code: r
    for r in (
        AccessibilityReason("R1", "Contain no-speech segment", "clarify the visual contents"),
        AccessibilityReason(
            "R2", "Not informative language", "clarify the concrete details of visual contents"
        ),
        AccessibilityReason("R3", "Frequent shot changes", "clarify the changing scenes"),
        AccessibilityReason("R4", "Numerous visual entities", "clarify any important visual entities"),
        AccessibilityReason(
            "R5",
            "Specific visual details not covered by speech",
            "clarify any missing visual details",
        ),
        AccessibilityReason("R6", "On-screen text not in speech", "clarify the important on-screen text"),
        AccessibilityReason(
            "R7", "Reference words without explanations", "clarify it/this/that words in the speech"
        ),
    )
}

REASON_ORDER = tuple(REASONS)  # R1..R7


class Tier(Enum):
    ORANGE = "orange"      # top-k least accessible
    YELLOW = "yellow"      # second tier: any detected reason
    UNLABELED = "none"


@dataclass(frozen=True)
class Segment:
    video_id: str
    start: int
    end: int
    score: float = 1.0
    tier: Tier = Tier.UNLABELED
    reasons: frozenset[str] = frozenset()

    @property
    def interval(self) -> Interval:
        return (self.start, self.end)


class ScorerProvider(Protocol):
    """Scores intervals of a video; output aligns with input, values in [0,1],
    deterministic for fixed inputs. Implementations must either be safe for
    concurrent calls or set `requires_serialization = True`, in which case
    analyze() funnels all calls through one queue."""

    def scores(self, record: VideoRecord, intervals: Sequence[Interval]) -> list[float]: ...


# shared queue for scorers that declare themselves non-reentrant
_SERIALIZED_SCORER_LOCK = threading.Lock()


def _run_scorer(
    scorer: ScorerProvider, record: VideoRecord, intervals: Sequence[Interval]
) -> list[float]:
    if getattr(scorer, "requires_serialization", False):
        with _SERIALIZED_SCORER_LOCK:
            return scorer.scores(record, intervals)
    return scorer.scores(record, intervals)


# --- segmentation -----------------------------------------------------------


def segment_timeline(record: VideoRecord, cfg: AnalysisConfig = AnalysisConfig()) -> list[Interval]:
    """Partition [0, duration] at speech-cue edges and shot boundaries.

    Boundaries are coalesced left to right so no interval is shorter than
    cfg.min_segment_ms; the final remainder may be shorter. An empty record
    yields the single interval [0, duration].
    """
    candidates = set()
    for cue in record.speech_cues:
        candidates.add(cue.start)
        candidates.add(cue.end)
    for shot in record.shots:
        candidates.add(shot.time)

    boundaries = [0]
    for t in sorted(candidates):
        if t <= 0 or t >= record.duration:
            continue
        if t - boundaries[-1] >= cfg.min_segment_ms:
            boundaries.append(t)
    boundaries.append(record.duration)
    return [(boundaries[i], boundaries[i + 1]) for i in range(len(boundaries) - 1)]


# --- heuristic scoring ------------------------------------------------------


def speech_coverage(record: VideoRecord, interval: Interval) -> float:
    """Fraction of the interval overlapped by speech cues (cues are
    overlap-free post-ingest, so overlaps sum directly)."""
    start, end = interval
    length = end - start
    if length <= 0:
        return 0.0
    covered = sum(c.overlap_ms(start, end) for c in record.speech_cues)
    return min(1.0, covered / length)


def language_informativeness(record: VideoRecord, interval: Interval) -> float:
    """1 - stopword ratio of the overlapping speech text, clamped; an
    interval with no speech tokens is maximally uninformative (0)."""
    text = " ".join(c.text for c in record.speech_in(*interval))
    ratio = stopword_ratio(text)
    if ratio is None:
        return 0.0
    return min(1.0, max(0.0, 1.0 - ratio))


def shot_stability(record: VideoRecord, interval: Interval) -> float:
    """1 - min(1, shots_per_10s / 3); 3+ cuts per 10s is fully unstable."""
    start, end = interval
    length = end - start
    if length <= 0:
        return 1.0
    rate_per_10s = len(record.shots_within(start, end)) / (length / 10_000)
    return 1.0 - min(1.0, rate_per_10s / 3.0)


def heuristic_score(
    record: VideoRecord, interval: Interval, cfg: AnalysisConfig = AnalysisConfig()
) -> float:
    """Weighted mean of speech coverage, language informativeness, and shot
    stability (default weights 0.5/0.25/0.25)."""
    weights = (cfg.weight_speech_coverage, cfg.weight_informativeness, cfg.weight_shot_stability)
    subs = (
        speech_coverage(record, interval),
        language_informativeness(record, interval),
        shot_stability(record, interval),
    )
    total = sum(weights)
    return sum(w * s for w, s in zip(weights, subs)) / total


class HeuristicScorer:
    """Default ScorerProvider; pure and safe for concurrent calls."""

    def __init__(self, cfg: AnalysisConfig = AnalysisConfig()):
        self._cfg = cfg

    def scores(self, record: VideoRecord, intervals: Sequence[Interval]) -> list[float]:
        return [heuristic_score(record, iv, self._cfg) for iv in intervals]


# --- reason detection -------------------------------------------------------


def _label_in_text(label: str, text_tokens: set[str]) -> bool:
    parts = tokens(label)
    return bool(parts) and all(p in text_tokens for p in parts)


def _normalize(text: str) -> str:
    return re.sub(r"\s+", " ", text.casefold()).strip()


def _has_unresolved_reference(cue_text: str) -> bool:
    stops = stopwords()
    seen_noun = False
    for tok in tokens(cue_text):
        if tok in _REFERENCE_WORDS and not seen_noun:
            return True
        if tok not in stops and not tok.isdigit():
            seen_noun = True
    return False


def detect_reasons(
    record: VideoRecord, interval: Interval, cfg: AnalysisConfig = AnalysisConfig()
) -> frozenset[str]:
    """Evaluate all seven reason rules on one interval; thresholds come from
    the config (the rules are qualitative, the numbers are tunables)."""
    start, end = interval
    length = max(1, end - start)
    speech = record.speech_in(start, end)
    speech_text = " ".join(c.text for c in speech)
    speech_tokens = set(tokens(speech_text))
    found: set[str] = set()

    coverage = speech_coverage(record, interval)
    if coverage < cfg.no_speech_coverage_max:
        found.add("R1")

    ratio = stopword_ratio(speech_text)
    if speech and ratio is not None and ratio > cfg.stopword_ratio_min:
        found.add("R2")

    shot_rate = len(record.shots_within(start, end)) / (length / cfg.shot_rate_window_ms)
    if shot_rate > 1.0:
        found.add("R3")

    labels = {e.label.strip().casefold() for e in record.entities_in(start, end)}
    if len(labels) >= cfg.entity_count_min:
        found.add("R4")

    undescribed = [lab for lab in labels if not _label_in_text(lab, speech_tokens)]
    if len(undescribed) >= cfg.undescribed_entity_min:
        found.add("R5")

    for ocr in record.ocr_in(start, end):
        ocr_norm = _normalize(ocr.text)
        if ocr_norm and not any(ocr_norm in _normalize(c.text) for c in speech):
            found.add("R6")
            break

    if any(_has_unresolved_reference(c.text) for c in speech):
        found.add("R7")

    return frozenset(found)


# --- labeling and hints -----------------------------------------------------


def label_segments(segments: Sequence[Segment], k: int = 5) -> list[Segment]:
    """Orange = the k lowest scores (ties broken by earlier start); among the
    rest, anything with a detected reason is yellow. Orange segments with an
    empty reason set get the generic missing-details reason so the hint
    pop-up always has content."""
    order = sorted(range(len(segments)), key=lambda i: (segments[i].score, segments[i].start))
    orange = set(order[:k])
    labeled = []
    for i, seg in enumerate(segments):
        if i in orange:
            reasons = seg.reasons or frozenset({"R5"})
            labeled.append(replace(seg, tier=Tier.ORANGE, reasons=reasons))
        elif seg.reasons:
            labeled.append(replace(seg, tier=Tier.YELLOW))
        else:
            labeled.append(replace(seg, tier=Tier.UNLABELED))
    return labeled


def hint_for(segment: Segment) -> list[str]:
    """Verbatim describing hints for a labeled segment, in R1..R7 order."""
    if segment.tier is Tier.UNLABELED:
        raise HintOnUnlabeledSegment(
            f"segment [{segment.start},{segment.end}] carries no accessibility label"
        )
    return [REASONS[code].hint for code in REASON_ORDER if code in segment.reasons]


def popup_messages(segment: Segment) -> list[str]:
    """Hint pop-up body lines, one per reason."""
    if segment.tier is Tier.UNLABELED:
        raise HintOnUnlabeledSegment(
            f"segment [{segment.start},{segment.end}] carries no accessibility label"
        )
    return [
        f"This segment may be inaccessible: {REASONS[code].name}. You can help: {REASONS[code].hint}."
        for code in REASON_ORDER
        if code in segment.reasons
    ]


# --- whole-video analysis ---------------------------------------------------


@dataclass(frozen=True)
class VideoAnalysis:
    video_id: str
    duration: int
    segments: tuple[Segment, ...]

    def segment_index_at(self, t: int) -> int:
        """Index of the segment containing playhead t (start <= t < end;
        t == duration falls into the last segment). Raises ValueError when t
        is outside [0, duration]."""
        if not 0 <= t <= self.duration:
            raise ValueError(f"t={t} outside [0,{self.duration}]")
        starts = [s.start for s in self.segments]
        idx = bisect_left(starts, t + 1) - 1
        return max(0, min(idx, len(self.segments) - 1))

    def segment_at(self, t: int) -> Segment:
        return self.segments[self.segment_index_at(t)]

    def segment_index_for_anchor(self, anchor: int) -> int:
        """Segment owning a comment anchor: start < anchor <= end, except
        anchor 0 which belongs to the first segment (boundary anchors go to
        the earlier segment)."""
        if not 0 <= anchor <= self.duration:
            raise ValueError(f"anchor={anchor} outside [0,{self.duration}]")
        ends = [s.end for s in self.segments]
        return min(bisect_left(ends, anchor), len(self.segments) - 1)


def analyze(
    record: VideoRecord,
    cfg: AnalysisConfig = AnalysisConfig(),
    scorer: ScorerProvider | None = None,
) -> VideoAnalysis:
    """Full pipeline for one video: segment, score, detect reasons, label."""
    scorer = scorer or HeuristicScorer(cfg)
    intervals = segment_timeline(record, cfg)
    scores = _run_scorer(scorer, record, intervals)
    if len(scores) != len(intervals):
        raise ValueError("scorer returned wrong number of scores")
    segments = [
        Segment(
            video_id=record.video_id,
            start=iv[0],
            end=iv[1],
            score=scores[i],
            reasons=detect_reasons(record, iv, cfg),
        )
        for i, iv in enumerate(intervals)
    ]
    labeled = label_segments(segments, k=cfg.top_k)
    return VideoAnalysis(record.video_id, record.duration, tuple(labeled))


def analysis_to_payload(analysis: VideoAnalysis) -> dict:
    """The analysis JSON consumed by the progress-bar UI and the CLI."""
    return {
        "video_id": analysis.video_id,
        "duration_ms": analysis.duration,
        "segments": [
            {
                "start_ms": seg.start,
                "end_ms": seg.end,
                "score": seg.score,
                "tier": seg.tier.value,
                "reasons": [c for c in REASON_ORDER if c in seg.reasons],
                "hints": hint_for(seg) if seg.tier is not Tier.UNLABELED else [],
            }
            for seg in analysis.segments
        ],
    }


def analysis_from_payload(payload: dict) -> VideoAnalysis:
    segments = tuple(
        Segment(
            video_id=payload["video_id"],
            start=item["start_ms"],
            end=item["end_ms"],
            score=item["score"],
            tier=Tier(item["tier"]),
            reasons=frozenset(item.get("reasons", [])),
        )
        for item in payload["segments"]
    )
    return VideoAnalysis(payload["video_id"], payload["duration_ms"], segments)
