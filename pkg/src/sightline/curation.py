"""Related-reference suggestions and accessible-comment curation.

Suggestions surface captions and prior comments that share keywords with
the draft or sit near the playhead, so writers can ground their comment
and avoid writing redundant ones. Curation is the admission filter for
the shared accessible-comment list: no timestamp, no entry; opinion-only
comments additionally need some lexical kinship with the nearby speech.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Protocol, Sequence

import httpx

from .analysis import VideoAnalysis
from .comments import Category, Comment, CommentAnalysis
from .config import CurationPolicy
from .errors import SimilarityUnavailable
from .ingest import VideoRecord
from .textutils import extract_keywords, strip_timestamps

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Suggestion:
    source: str      # "caption" | "prior_comment"
    ref_id: str
    text: str
    anchor_ms: int
    relevance: float


class SimilarityProvider(Protocol):
    """Symmetric, deterministic text similarity in [0,1]."""

    def similarity(self, a: str, b: str) -> float: ...


class LexicalSimilarity:
    """Cosine over term vectors of extracted keywords. Two empty keyword
    sets are identical (1.0); exactly one empty is fully dissimilar (0.0)."""

    def similarity(self, a: str, b: str) -> float:
        va = Counter(extract_keywords(a))
        vb = Counter(extract_keywords(b))
        if not va and not vb:
            return 1.0
        if not va or not vb:
            return 0.0
        if va == vb:
            return 1.0
        dot = sum(va[t] * vb[t] for t in va.keys() & vb.keys())
        # integer sums under a single sqrt keep identical vectors at exactly 1.0
        norm = math.sqrt(sum(v * v for v in va.values()) * sum(v * v for v in vb.values()))
        return min(1.0, dot / norm) if norm else 0.0


class HttpSimilarity:
    """External embedding service client: POST {"a","b"} -> {"similarity"}.

    Curation must never block on a third-party service: failures fall back
    to the lexical provider with a logged warning, unless fallback is
    disabled, in which case SimilarityUnavailable propagates.
    """

    def __init__(self, url: str, timeout_s: float = 2.0, fallback: SimilarityProvider | None = None):
        self.url = url
        self.timeout_s = timeout_s
        self.fallback = fallback

    def similarity(self, a: str, b: str) -> float:
        try:
            resp = httpx.post(self.url, json={"a": a, "b": b}, timeout=self.timeout_s)
            resp.raise_for_status()
            value = float(resp.json()["similarity"])
            return min(1.0, max(0.0, value))
        except Exception as exc:
            if self.fallback is not None:
                log.warning("similarity provider %s failed (%s); using lexical fallback", self.url, exc)
                return self.fallback.similarity(a, b)
            raise SimilarityUnavailable(f"similarity provider {self.url} failed: {exc}") from exc


# --- suggestion ranking ------------------------------------------------------


def _window_interval(
    t: int,
    analysis: VideoAnalysis | None,
    policy: CurationPolicy,
) -> tuple[int, int]:
    """The reference window around t: explicit policy window if set, else the
    containing segment, else +/- fallback_window_ms."""
    if policy.window_ms is not None:
        return (t - policy.window_ms, t + policy.window_ms)
    if analysis is not None and analysis.segments and 0 <= t <= analysis.duration:
        seg = analysis.segment_at(t)
        return (seg.start, seg.end)
    return (t - policy.fallback_window_ms, t + policy.fallback_window_ms)


def suggest(
    draft_keywords: Sequence[str],
    playhead_ms: int,
    record: VideoRecord,
    analysis: VideoAnalysis | None,
    prior_comments: Sequence[Comment] = (),
    policy: CurationPolicy = CurationPolicy(),
    limit: int = 5,
) -> list[Suggestion]:
    """Rank captions and prior comments for the reference panel.

    relevance = |candidate keywords ∩ draft keywords| + 0.5 when the
    candidate's anchor falls inside the playhead window. Zero-relevance
    candidates are dropped; ties break toward the playhead, then by ref_id.
    """
    window = _window_interval(playhead_ms, analysis, policy)
    draft_set = set(draft_keywords)
    candidates: list[Suggestion] = []

    def add(source: str, ref_id: str, text: str, anchor: int):
        overlap = len(draft_set & set(extract_keywords(text)))
        relevance = float(overlap)
        if window[0] <= anchor <= window[1]:
            relevance += 0.5
        if relevance > 0:
            candidates.append(Suggestion(source, ref_id, text, anchor, relevance))

    for i, cue in enumerate(record.speech_cues):
        add("caption", f"caption:{i:04d}", cue.text, cue.start)
    for comment in prior_comments:
        if comment.anchor is not None:
            add("prior_comment", comment.comment_id, comment.raw_text, comment.anchor)

    candidates.sort(key=lambda s: (-s.relevance, abs(s.anchor_ms - playhead_ms), s.ref_id))
    return candidates[:limit]


# --- curation ---------------------------------------------------------------

REJECT_NO_TIMESTAMP = "NoTimestamp"
REJECT_OFF_TOPIC = "OffTopic"


@dataclass(frozen=True)
class CurationDecision:
    accepted: bool
    reason: Optional[str] = None  # one of the REJECT_* codes when rejected

    @property
    def label(self) -> str:
        return "accepted" if self.accepted else "rejected"


def curate(
    comment_analysis: CommentAnalysis,
    raw_text: str,
    record: VideoRecord,
    analysis: VideoAnalysis | None = None,
    policy: CurationPolicy = CurationPolicy(),
    provider: SimilarityProvider | None = None,
) -> CurationDecision:
    """Admission decision for the accessible-comment list.

    Anchor-less comments are always rejected. Low similarity to nearby
    captions rejects only opinion-only comments -- descriptive comments
    intentionally add content the captions lack, and discarding them for
    that would invert the point of the list.
    """
    if comment_analysis.anchor is None:
        return CurationDecision(False, REJECT_NO_TIMESTAMP)

    if comment_analysis.category is Category.OPINION_ONLY:
        provider = provider or LexicalSimilarity()
        window = _window_interval(comment_analysis.anchor, analysis, policy)
        body = strip_timestamps(raw_text)
        nearby = [c for c in record.speech_cues if c.overlap_ms(window[0], window[1]) > 0]
        best = max((provider.similarity(body, cue.text) for cue in nearby), default=0.0)
        if best < policy.min_similarity:
            return CurationDecision(False, REJECT_OFF_TOPIC)
    return CurationDecision(True)


def accessible_order(comments: Sequence[Comment]) -> list[Comment]:
    """Accessible-list ordering: anchor ascending, then created_at, stable."""
    return sorted(
        comments,
        key=lambda c: (c.anchor if c.anchor is not None else 0, c.created_at),
    )
