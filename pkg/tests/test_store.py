"""Append-only store: revisions, replay, compaction."""

from __future__ import annotations

import json

import pytest

from sightline.store import Store


def test_append_get_and_revisions(tmp_path):
    store = Store(tmp_path)
    r1 = store.append("video", "v1", {"a": 1})
    r2 = store.append("video", "v1", {"a": 2})
    assert (r1.revision, r2.revision) == (1, 2)
    assert store.get("video", "v1") == {"a": 2}
    assert store.get("video", "nope") is None
    store.close()


def test_unknown_kind_rejected(tmp_path):
    store = Store(tmp_path)
    with pytest.raises(ValueError):
        store.append("widget", "w", {})
    store.close()


def test_replay_restores_state_and_revision_counter(tmp_path):
    store = Store(tmp_path)
    store.append("comment", "c1", {"n": 1})
    store.append("comment", "c2", {"n": 2})
    store.append("comment", "c1", {"n": 3})
    store.close()

    reopened = Store(tmp_path)
    assert reopened.get("comment", "c1") == {"n": 3}
    assert [k for k, _ in reopened.items("comment")] == ["c1", "c2"]  # first-write order
    assert reopened.append("comment", "c1", {"n": 4}).revision == 3
    reopened.close()


def test_compaction_preserves_view(tmp_path):
    store = Store(tmp_path)
    for i in range(5):
        store.append("user", f"u{i}", {"i": i})
    store.append("user", "u0", {"i": 99})
    store.compact()
    assert (tmp_path / "store.snapshot").exists()
    assert (tmp_path / "store.log").read_text() == ""
    store.append("user", "u1", {"i": 42})
    store.close()

    reopened = Store(tmp_path)
    assert reopened.get("user", "u0") == {"i": 99}
    assert reopened.get("user", "u1") == {"i": 42}
    assert reopened.get("user", "u4") == {"i": 4}
    reopened.close()


def test_one_line_per_append(tmp_path):
    store = Store(tmp_path)
    store.append("comment", "c", {"deep": {"payload": [1, 2, 3]}})
    store.close()
    lines = (tmp_path / "store.log").read_text().strip().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["payload"]["deep"]["payload"] == [1, 2, 3]
