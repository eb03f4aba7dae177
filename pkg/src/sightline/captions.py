"""SRT and WebVTT caption parsing/serialization.

Lenient where real-world files are messy (BOM, blank runs, unsorted cues,
1-2 digit hour fields, '.' vs ',' millisecond separators), strict where it
matters: a timestamp that does not parse, or a cue that ends at/before its
start, raises MalformedTimestamp with the line it came from. Styling and
voice tags are stripped; multi-line payloads are joined with single spaces.
"""

from __future__ import annotations

import html
import re
from enum import Enum
from pathlib import Path

from .errors import MalformedTimestamp
from .ingest import CueKind, TimedCue

_SRT_TIME = re.compile(r"(\d{1,2}):(\d{2}):(\d{2})[,.](\d{1,3})")
_VTT_TIME = re.compile(r"(?:(\d{1,2}):)?(\d{1,2}):(\d{2})\.(\d{1,3})")
_TAG_RE = re.compile(r"<[^>]*>")
_BRACE_TAG_RE = re.compile(r"\{\\[^}]*\}")  # ASS-style override tags seen in SRT
_WS_RE = re.compile(r"\s+")


class CaptionFormat(Enum):
    SRT = "srt"
    WEBVTT = "vtt"

    @classmethod
    def from_suffix(cls, path: str | Path) -> "CaptionFormat":
        suffix = Path(path).suffix.lower()
        if suffix == ".srt":
            return cls.SRT
        if suffix in (".vtt", ".webvtt"):
            return cls.WEBVTT
        raise ValueError(f"unrecognized caption extension: {suffix!r}")


def _decode(raw: bytes | str) -> str:
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8-sig")
    return raw.lstrip("﻿").replace("\r\n", "\n").replace("\r", "\n")


def _blocks(text: str) -> list[tuple[int, list[str]]]:
    """Split into blank-line-separated blocks, keeping 1-based line numbers."""
    blocks: list[tuple[int, list[str]]] = []
    current: list[str] = []
    start_line = 1
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.strip():
            if not current:
                start_line = lineno
            current.append(line)
        elif current:
            blocks.append((start_line, current))
            current = []
    if current:
        blocks.append((start_line, current))
    return blocks


def _clean_text(lines: list[str]) -> str:
    joined = " ".join(lines)
    joined = _BRACE_TAG_RE.sub("", joined)
    joined = _TAG_RE.sub("", joined)
    joined = html.unescape(joined)
    return _WS_RE.sub(" ", joined).strip()


def _parse_time(pattern: re.Pattern, token: str, lineno: int, column: int) -> int:
    m = pattern.match(token)
    if not m:
        raise MalformedTimestamp(f"unparseable timestamp {token!r}", line=lineno, column=column)
    hours = int(m.group(1)) if m.group(1) else 0
    minutes, seconds = int(m.group(2)), int(m.group(3))
    millis = int(m.group(4).ljust(3, "0"))
    return ((hours * 3600 + minutes * 60 + seconds) * 1000) + millis


def _parse_timing_line(line: str, lineno: int, pattern: re.Pattern) -> tuple[int, int]:
    if "-->" not in line:
        raise MalformedTimestamp("expected a 'start --> end' timing line", line=lineno)
    start_tok, end_tok = (part.strip() for part in line.split("-->", 1))
    # cue settings after the end timestamp (WebVTT) are ignored
    end_tok = end_tok.split(" ", 1)[0].strip() or end_tok
    start = _parse_time(pattern, start_tok, lineno, line.find(start_tok) + 1)
    end = _parse_time(pattern, end_tok, lineno, line.find("-->") + 4)
    if end <= start:
        raise MalformedTimestamp(
            f"cue ends at {end} ms, before or at its start {start} ms", line=lineno
        )
    return start, end


def _parse_srt(text: str) -> list[TimedCue]:
    cues = []
    for start_line, lines in _blocks(text):
        idx = 0
        # SRT sequence index line: digits only, discarded
        if lines and lines[0].strip().isdigit() and len(lines) > 1:
            idx = 1
        start, end = _parse_timing_line(lines[idx], start_line + idx, _SRT_TIME)
        payload = _clean_text(lines[idx + 1 :])
        if payload:
            cues.append(TimedCue(start, end, payload, CueKind.SPEECH))
    return cues


def _parse_vtt(text: str) -> list[TimedCue]:
    cues = []
    blocks = _blocks(text)
    if blocks and blocks[0][1][0].lstrip().startswith("WEBVTT"):
        blocks = blocks[1:]
    for start_line, lines in blocks:
        head = lines[0].strip()
        if head.startswith(("NOTE", "STYLE", "REGION")):
            continue
        idx = 0
        if "-->" not in lines[0]:
            # cue identifier line
            if len(lines) < 2 or "-->" not in lines[1]:
                raise MalformedTimestamp("expected a 'start --> end' timing line", line=start_line)
            idx = 1
        start, end = _parse_timing_line(lines[idx], start_line + idx, _VTT_TIME)
        payload = _clean_text(lines[idx + 1 :])
        if payload:
            cues.append(TimedCue(start, end, payload, CueKind.SPEECH))
    return cues


def parse_captions(raw: bytes | str, fmt: CaptionFormat) -> list[TimedCue]:
    """Parse a caption stream into cues ordered by start time.

    Unsorted input is re-sorted (not an error); an empty file yields an
    empty list; cues whose payload is empty after tag stripping are dropped.
    """
    text = _decode(raw)
    if not text.strip():
        return []
    cues = _parse_srt(text) if fmt is CaptionFormat.SRT else _parse_vtt(text)
    return sorted(cues, key=lambda c: (c.start, c.end))


def _fmt_srt_time(ms: int) -> str:
    h, rem = divmod(ms, 3600_000)
    m, rem = divmod(rem, 60_000)
    s, milli = divmod(rem, 1000)
    return f"{h:02d}:{m:02d}:{s:02d},{milli:03d}"


def _fmt_vtt_time(ms: int) -> str:
    return _fmt_srt_time(ms).replace(",", ".")


def serialize_captions(cues: list[TimedCue], fmt: CaptionFormat) -> str:
    """Render cues back out; parse(serialize(parse(x))) == parse(x)."""
    if fmt is CaptionFormat.SRT:
        blocks = [
            f"{i}\n{_fmt_srt_time(c.start)} --> {_fmt_srt_time(c.end)}\n{c.text}"
            for i, c in enumerate(cues, start=1)
        ]
        return "\n\n".join(blocks) + ("\n" if blocks else "")
    blocks = [f"{_fmt_vtt_time(c.start)} --> {_fmt_vtt_time(c.end)}\n{c.text}" for c in cues]
    return "WEBVTT\n\n" + "\n\n".join(blocks) + ("\n" if blocks else "")


def load_caption_file(path: str | Path) -> list[TimedCue]:
    fmt = CaptionFormat.from_suffix(path)
    return parse_captions(Path(path).read_bytes(), fmt)
