"""Comment analysis: timestamp anchors, vague-reference detection, keyword
extraction, the four-way category heuristic, and draft nudges.

The category rules approximate human thematic coding with auditable word
lists (see data/). They are deliberately shallow -- no coreference models,
no grammar -- and tuned so the documented reference comments separate the
way their human coders separated them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .analysis import Tier, VideoAnalysis, hint_for
from .errors import VideoNotAnalyzed
from .textutils import (
    TIMESTAMP_RE,
    entity_nouns,
    extract_keywords,
    format_timestamp,
    opinion_markers,
    stopwords,
    timestamp_ms,
    tokens,
    tokens_with_offsets,
    visual_lexicon,
)

# Pronouns flagged when they have no antecedent: the demonstratives plus the
# personal pronouns that most often point at someone on screen.
VAGUE_PRONOUNS = frozenset({"it", "this", "that", "these", "those", "he", "she", "they"})

# "I like it when ..." -- a clause introducer right after the pronoun means
# it is not referring to something on screen.
_CLAUSE_INTRODUCERS = frozenset({"when", "that", "how", "if"})

_SENTENCE_ENDERS = ".!?"


class Category(Enum):
    DESCRIPTIVE = "descriptive"
    REACTION_WITH_VISUALS = "reaction_with_visuals"
    VISUAL_MENTION_ONLY = "visual_mention_only"
    OPINION_ONLY = "opinion_only"


class NudgeKind(Enum):
    SPARK_LABEL = "spark_label"                          # progress-bar color span
    SIGNAL_ICON = "signal_icon"                          # on-entry segment icon
    SIGNAL_REMINDER = "signal_reminder"                  # draft reminder chip
    FACILITATOR_HINT = "facilitator_hint"                # describing-hint pop-up
    FACILITATOR_REFERENCE = "facilitator_reference"      # related captions/comments
    FACILITATOR_TIMESTAMP_INSERT = "facilitator_timestamp_insert"  # icon click insert


@dataclass(frozen=True)
class Nudge:
    kind: NudgeKind
    message: str
    target: str  # "draft" or "segment:<index>"


@dataclass(frozen=True)
class VagueRef:
    token: str   # as typed
    offset: int  # char offset into the raw text


@dataclass(frozen=True)
class Comment:
    comment_id: str
    video_id: str
    author_id: str
    raw_text: str
    anchor: Optional[int] = None
    created_at: float = 0.0

    def __post_init__(self):
        if not self.raw_text.strip():
            raise ValueError("comment text is empty")


@dataclass(frozen=True)
class CommentAnalysis:
    anchor: Optional[int]
    vague_refs: tuple[VagueRef, ...]
    keywords: tuple[str, ...]
    category: Category


def parse_anchor(text: str, duration: int | None = None) -> Optional[tuple[int, tuple[int, int]]]:
    """First timestamp token in the text, normalized to ms, with its span.

    Seconds/minutes >= 60 overflow upward ("8:60" -> 540000 ms). Returns
    None when there is no match or the first match exceeds the duration
    (duration=None means unbounded, for corpus evaluation without a video).
    """
    m = TIMESTAMP_RE.search(text)
    if not m:
        return None
    ms = timestamp_ms(m)
    if duration is not None and ms > duration:
        return None
    return ms, m.span()


def _sentences(text: str) -> list[tuple[int, str]]:
    """(start offset, sentence text) pairs; split after runs of .!?"""
    out = []
    start = 0
    for i, ch in enumerate(text):
        if ch in _SENTENCE_ENDERS:
            if text[start : i + 1].strip():
                out.append((start, text[start : i + 1]))
            start = i + 1
    if text[start:].strip():
        out.append((start, text[start:]))
    return out


def detect_vague_refs(text: str) -> list[VagueRef]:
    """Flag ambiguous pronouns with no noun-like antecedent in the sentence.

    Noun-like = any non-stopword, non-pronoun, non-number token. A pronoun
    immediately followed by a clause introducer (when/that/how/if) is exempt.
    """
    stops = stopwords()
    refs = []
    for sent_start, sentence in _sentences(text):
        toks = tokens_with_offsets(sentence)
        seen_noun = False
        for i, (tok, off) in enumerate(toks):
            if tok in VAGUE_PRONOUNS and not seen_noun:
                nxt = toks[i + 1][0] if i + 1 < len(toks) else None
                if nxt not in _CLAUSE_INTRODUCERS:
                    abs_off = sent_start + off
                    refs.append(VagueRef(text[abs_off : abs_off + len(tok)], abs_off))
            if tok not in stops and tok not in VAGUE_PRONOUNS and not tok.isdigit():
                seen_noun = True
    return refs


def classify_comment(text: str, context_text: str = "") -> Category:
    """Four-way category heuristic.

    Visually grounded = a visual-lexicon keyword, or (when overlapping
    speech exists) >= 2 non-opinion keywords absent from that speech.
    Grounded comments split on opinion markers (descriptive vs. reaction);
    otherwise a generic visual-entity mention is a bare visual mention, and
    everything else is opinion-only.
    """
    keywords = extract_keywords(text)
    all_tokens = tokens(text)
    lexicon = visual_lexicon()
    markers = opinion_markers()

    context_keywords = set(extract_keywords(context_text)) if context_text.strip() else None
    if context_keywords is not None:
        novel = [k for k in keywords if k not in context_keywords and k not in markers]
    else:
        novel = []

    visually_grounded = any(k in lexicon for k in keywords) or len(novel) >= 2
    opinionated = "!" in text or any(t in markers for t in all_tokens)

    if visually_grounded:
        return Category.REACTION_WITH_VISUALS if opinionated else Category.DESCRIPTIVE
    if any(k in entity_nouns() for k in keywords) and len(novel) < 2:
        return Category.VISUAL_MENTION_ONLY
    return Category.OPINION_ONLY


def analyze_comment(
    text: str, duration: int | None = None, context_text: str = ""
) -> CommentAnalysis:
    anchored = parse_anchor(text, duration)
    return CommentAnalysis(
        anchor=anchored[0] if anchored else None,
        vague_refs=tuple(detect_vague_refs(text)),
        keywords=tuple(extract_keywords(text)),
        category=classify_comment(text, context_text),
    )


def nudge_draft(
    draft: str,
    playhead_ms: int,
    analysis: VideoAnalysis | None,
) -> list[Nudge]:
    """Signal reminders and describing hints for an in-progress draft.

    Order: timestamp reminder first, vague-reference reminders by offset,
    then the hint for the playhead's segment when it is labeled. Nudges
    never block submission; they are advice, not validation.
    """
    if analysis is None:
        raise VideoNotAnalyzed("draft nudges need a completed video analysis")

    nudges: list[Nudge] = []
    if parse_anchor(draft, analysis.duration) is None:
        stamp = format_timestamp(playhead_ms)
        nudges.append(
            Nudge(
                NudgeKind.SIGNAL_REMINDER,
                f"Add a timestamp like {stamp} so others know which moment you mean",
                "draft",
            )
        )
    for ref in detect_vague_refs(draft):
        nudges.append(
            Nudge(NudgeKind.SIGNAL_REMINDER, f"Clarify what '{ref.token}' refers to", "draft")
        )

    idx = analysis.segment_index_at(min(max(playhead_ms, 0), analysis.duration))
    segment = analysis.segments[idx]
    if segment.tier is not Tier.UNLABELED:
        nudges.append(
            Nudge(NudgeKind.FACILITATOR_HINT, "; ".join(hint_for(segment)), f"segment:{idx}")
        )
    return nudges
