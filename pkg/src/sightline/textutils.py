"""Shared text machinery: tokenization, stopwords, the timestamp micro-grammar.

Everything here is locale-independent (plain regex over unicode strings) and
backed by versioned word lists shipped as package data, so downstream
heuristics are auditable and tunable without code changes.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

# Word = alphanumeric run with optional interior apostrophes ("vlogger's").
_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z0-9]+)*")

# A timestamp token: M:SS, MM:SS, or H:MM:SS, starting at a whitespace/string
# boundary and not glued to a trailing digit or colon. Seconds/minutes >= 60
# are tolerated and normalized by overflow (participants write "8:60").
TIMESTAMP_RE = re.compile(r"(?<!\S)(?:(\d{1,2}):)?(\d{1,2}):(\d{2})(?![\d:])")

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?$")


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("sightline").joinpath(f"data/{name}").read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    return _load_wordlist("stopwords.txt")


@lru_cache(maxsize=None)
def visual_lexicon() -> frozenset[str]:
    return _load_wordlist("visual_lexicon.txt")


@lru_cache(maxsize=None)
def opinion_markers() -> frozenset[str]:
    return _load_wordlist("opinion_markers.txt")


@lru_cache(maxsize=None)
def entity_nouns() -> frozenset[str]:
    return _load_wordlist("entity_nouns.txt")


def tokens(text: str) -> list[str]:
    """Lowercased word tokens, in order, duplicates kept."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def tokens_with_offsets(text: str) -> list[tuple[str, int]]:
    """(lowercased token, char offset into the original text) pairs."""
    return [(m.group(0).lower(), m.start()) for m in _WORD_RE.finditer(text)]


def is_number(token: str) -> bool:
    return bool(_NUMBER_RE.fullmatch(token))


def timestamp_ms(match: re.Match) -> int:
    """Normalize a TIMESTAMP_RE match to milliseconds (lenient overflow)."""
    hours = int(match.group(1)) if match.group(1) else 0
    minutes = int(match.group(2))
    seconds = int(match.group(3))
    return (hours * 3600 + minutes * 60 + seconds) * 1000


def strip_timestamps(text: str) -> str:
    """Remove timestamp tokens and collapse the surrounding whitespace."""
    stripped = TIMESTAMP_RE.sub("", text)
    return re.sub(r"\s+", " ", stripped).strip()


def format_timestamp(ms: int) -> str:
    """Render milliseconds as M:SS (H:MM:SS past the hour mark)."""
    total_s = max(0, ms) // 1000
    h, rem = divmod(total_s, 3600)
    m, s = divmod(rem, 60)
    if h:
        return f"{h}:{m:02d}:{s:02d}"
    return f"{m}:{s:02d}"


def extract_keywords(text: str) -> list[str]:
    """Lowercase content words: stopwords, numbers, and timestamp tokens
    removed; first-occurrence order; duplicates dropped."""
    stops = stopwords()
    seen: set[str] = set()
    out: list[str] = []
    for tok in tokens(strip_timestamps(text)):
        if tok in stops or is_number(tok) or tok in seen:
            continue
        seen.add(tok)
        out.append(tok)
    return out


def stopword_ratio(text: str) -> float | None:
    """Fraction of word tokens that are stopwords; None when no tokens."""
    toks = tokens(text)
    if not toks:
        return None
    stops = stopwords()
    return sum(1 for t in toks if t in stops) / len(toks)
