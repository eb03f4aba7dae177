"""Comment engine: anchors, vague references, keywords, categories, nudges."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sightline.analysis import Segment, Tier, VideoAnalysis
from sightline.comments import (
    Category,
    NudgeKind,
    analyze_comment,
    classify_comment,
    detect_vague_refs,
    nudge_draft,
    parse_anchor,
)
from sightline.errors import VideoNotAnalyzed
from sightline.textutils import extract_keywords, stopwords, visual_lexicon, entity_nouns


# --- anchors -----------------------------------------------------------------


def test_anchor_simple():
    got = parse_anchor("1:29 Green algae swirls in the wake created by a tiger", 600_000)
    assert got == (89_000, (0, 4))


def test_anchor_overflow_minutes():
    got = parse_anchor("8:60 neurons are shown going down the nerves", 600_000)
    assert got is not None and got[0] == 540_000


def test_anchor_absent_is_none():
    assert parse_anchor("Seattle is a beautiful city", 600_000) is None


def test_anchor_beyond_duration_is_none():
    assert parse_anchor("9:30 way past the end", 540_000) is None


def test_anchor_hours_form():
    got = parse_anchor("see 1:02:03 for the reveal", None)
    assert got is not None and got[0] == 3_723_000


def test_anchor_requires_token_boundary():
    assert parse_anchor("ratio12:34 is not a timestamp", None) is None
    got = parse_anchor("At 1:12 they are showing a drawing", None)
    assert got is not None and got[0] == 72_000


def test_anchor_first_match_semantics():
    text = "0:10 first then 0:20 second"
    first = parse_anchor(text, None)
    assert first is not None and first[0] == 10_000
    start, end = first[1]
    rest = text[:start] + text[end:]
    second = parse_anchor(rest, None)
    assert second is not None and second[0] == 20_000


# --- vague references ----------------------------------------------------------


def test_vague_refs_original_example():
    refs = detect_vague_refs("I like it when he walked in. The scene was so cool!")
    assert [(r.token, r.offset) for r in refs] == [("he", 15)]


def test_vague_refs_revised_example_clean():
    assert detect_vague_refs("5:26 I like it when the vlogger's friend walked in.") == []


def test_vague_refs_empty_and_plain():
    assert detect_vague_refs("") == []
    assert detect_vague_refs("Wonderful video") == []


def test_vague_refs_sentence_scoped():
    refs = detect_vague_refs("The tiger dives. It splashes loudly.")
    assert [r.token for r in refs] == ["It"]


def test_clause_introducer_exemption():
    assert detect_vague_refs("I like it when snow falls") == []
    assert [r.token for r in detect_vague_refs("this is so funny")] == ["this"]


@given(st.sampled_from(["they", "it", "this"]), st.sampled_from(["re", "s", "ok", "x"]))
def test_no_flag_inside_larger_words(pronoun, suffix):
    glued = pronoun + suffix
    refs = detect_vague_refs(f"wow {glued} everywhere")
    assert all(r.token.lower() != pronoun for r in refs)


def test_offsets_index_into_raw_text():
    text = "Look! These are wild."
    refs = detect_vague_refs(text)
    for ref in refs:
        assert text[ref.offset : ref.offset + len(ref.token)] == ref.token


# --- keywords ------------------------------------------------------------------


def test_keywords_stopword_filtering():
    assert extract_keywords("The cat is so cute chewing on the brush") == [
        "cat",
        "cute",
        "chewing",
        "brush",
    ]


def test_keywords_all_stopwords():
    assert extract_keywords("it it it") == []


def test_keywords_drop_timestamps_and_numbers():
    assert extract_keywords("1:29 tiger swims") == ["tiger", "swims"]
    assert extract_keywords("30 rabbits at 2:55 and 12 more") == ["rabbits"]


def test_keywords_first_occurrence_dedupe():
    assert extract_keywords("fox meets fox near fox den") == ["fox", "meets", "near", "den"]


def test_wordlists_disjoint_from_stopwords():
    stops = stopwords()
    assert not (visual_lexicon() & stops)
    assert not (entity_nouns() & stops)


# --- categories ----------------------------------------------------------------


CITED = [
    (
        "0:09 This shows a sunny, outdoor open area with trees, paths, and buildings in the "
        "background. There is a group of students standing talking to each other and we see two "
        "students walking together on the path.",
        Category.DESCRIPTIVE,
    ),
    ("3:31 Oh my! There's one white fox in all of the reddish ones!", Category.REACTION_WITH_VISUALS),
    ("3:21 various images to accompany the discussion", Category.VISUAL_MENTION_ONLY),
    ("0:19 I would love to visit the cat island!", Category.OPINION_ONLY),
]


@pytest.mark.parametrize("text,want", CITED)
def test_reference_categorizations(text, want):
    assert classify_comment(text) is want


def test_novelty_against_speech_context():
    # with matching speech nearby, the same words are no longer novel
    text = "2:10 the judges taste the winning pie"
    context = "our judges now taste the winning pie on stage"
    assert classify_comment(text, context) is Category.OPINION_ONLY
    # two content words the captions never said -> visually grounded
    assert classify_comment("2:10 a collie leaps over the hedge", context) is Category.DESCRIPTIVE


@given(st.text(max_size=120))
def test_classifier_is_total(text):
    assert classify_comment(text) in Category


def test_corpus_agreement(comment_corpus):
    rows = comment_corpus["comments"]
    anchor_hits = sum(
        1
        for row in rows
        if (lambda got: (got[0] if got else None) == row["expected_anchor_ms"])(
            parse_anchor(row["text"], None)
        )
    )
    category_hits = sum(
        1 for row in rows if classify_comment(row["text"]).value == row["expected_category"]
    )
    assert anchor_hits == len(rows)                      # anchor detection 100%
    assert category_hits / len(rows) >= 0.80             # human-coding agreement floor


# --- draft nudges ---------------------------------------------------------------


def _analysis():
    segments = (
        Segment("v", 0, 10_000, score=0.1, tier=Tier.ORANGE, reasons=frozenset({"R1"})),
        Segment("v", 10_000, 20_000, score=0.9, tier=Tier.UNLABELED),
        Segment("v", 20_000, 30_000, score=0.5, tier=Tier.YELLOW, reasons=frozenset({"R3"})),
    )
    return VideoAnalysis("v", 30_000, segments)


def test_nudges_compose_in_order():
    nudges = nudge_draft("this is so funny", playhead_ms=5_000, analysis=_analysis())
    kinds = [n.kind for n in nudges]
    assert kinds == [NudgeKind.SIGNAL_REMINDER, NudgeKind.SIGNAL_REMINDER, NudgeKind.FACILITATOR_HINT]
    assert "0:05" in nudges[0].message
    assert "'this'" in nudges[1].message
    assert nudges[2].message == "clarify the visual contents"
    assert nudges[2].target == "segment:0"


def test_anchored_clean_draft_in_plain_segment_no_nudges():
    draft = "0:12 The cat is so cute chewing on the brush"
    assert nudge_draft(draft, playhead_ms=12_000, analysis=_analysis()) == []


def test_empty_draft_only_timestamp_reminder():
    nudges = nudge_draft("", playhead_ms=15_000, analysis=_analysis())
    assert len(nudges) == 1
    assert nudges[0].kind is NudgeKind.SIGNAL_REMINDER
    assert "timestamp" in nudges[0].message.lower()


def test_hint_fires_on_yellow_segment():
    nudges = nudge_draft("0:25 neat sequence of cuts here", playhead_ms=25_000, analysis=_analysis())
    assert [n.kind for n in nudges] == [NudgeKind.FACILITATOR_HINT]
    assert nudges[0].message == "clarify the changing scenes"


def test_unanalyzed_video_rejected():
    with pytest.raises(VideoNotAnalyzed):
        nudge_draft("hello", 0, None)


def test_nudges_idempotent():
    a = nudge_draft("this is weird", 5_000, _analysis())
    b = nudge_draft("this is weird", 5_000, _analysis())
    assert a == b


def test_analyze_comment_bundle():
    result = analyze_comment("1:29 Green algae swirls in the wake", duration=600_000)
    assert result.anchor == 89_000
    assert result.category is Category.DESCRIPTIVE
    assert "algae" in result.keywords
    assert result.vague_refs == ()
