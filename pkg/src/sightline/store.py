"""Embedded persistence: an append-only JSONL log with an in-memory index
and snapshot compaction.

One record kind per domain object (video / analysis / comment / user); a
single appended line is the atomicity unit, so anything that must persist
together travels in one payload. A document-database adapter can replace
this behind the same four calls; the default keeps the repo self-contained.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path

KINDS = ("video", "analysis", "comment", "user")

_LOG_NAME = "store.log"
_SNAPSHOT_NAME = "store.snapshot"


@dataclass(frozen=True)
class StoreRecord:
    kind: str
    key: str
    revision: int
    payload: dict


class Store:
    """Latest-revision key/value view over an append-only log."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        # (kind, key) -> StoreRecord, insertion-ordered by first write
        self._index: dict[tuple[str, str], StoreRecord] = {}
        self._log_path = self.root / _LOG_NAME
        self._snapshot_path = self.root / _SNAPSHOT_NAME
        self._replay()
        self._log = open(self._log_path, "a", encoding="utf-8")

    def _replay(self) -> None:
        if self._snapshot_path.exists():
            with open(self._snapshot_path, "r", encoding="utf-8") as fh:
                for item in json.load(fh)["records"]:
                    rec = StoreRecord(item["kind"], item["key"], item["revision"], item["payload"])
                    self._index[(rec.kind, rec.key)] = rec
        if self._log_path.exists():
            with open(self._log_path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    item = json.loads(line)
                    rec = StoreRecord(item["kind"], item["key"], item["revision"], item["payload"])
                    self._index[(rec.kind, rec.key)] = rec

    def append(self, kind: str, key: str, payload: dict) -> StoreRecord:
        """Persist a new revision of (kind, key). fsync'd before returning."""
        if kind not in KINDS:
            raise ValueError(f"unknown record kind {kind!r}")
        with self._lock:
            prev = self._index.get((kind, key))
            rec = StoreRecord(kind, key, (prev.revision + 1) if prev else 1, payload)
            line = json.dumps(
                {"kind": rec.kind, "key": rec.key, "revision": rec.revision, "payload": rec.payload},
                ensure_ascii=False,
            )
            self._log.write(line + "\n")
            self._log.flush()
            os.fsync(self._log.fileno())
            self._index[(kind, key)] = rec
            return rec

    def get(self, kind: str, key: str) -> dict | None:
        rec = self._index.get((kind, key))
        return rec.payload if rec else None

    def items(self, kind: str) -> list[tuple[str, dict]]:
        """Latest payloads of one kind, in first-write order (replay order)."""
        return [(k[1], rec.payload) for k, rec in self._index.items() if k[0] == kind]

    def compact(self) -> None:
        """Fold the log into the snapshot; revisions survive compaction."""
        with self._lock:
            records = [
                {"kind": rec.kind, "key": rec.key, "revision": rec.revision, "payload": rec.payload}
                for rec in self._index.values()
            ]
            tmp = self._snapshot_path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump({"records": records}, fh, ensure_ascii=False)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, self._snapshot_path)
            self._log.close()
            self._log = open(self._log_path, "w", encoding="utf-8")

    def close(self) -> None:
        self._log.close()
