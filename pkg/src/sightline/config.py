"""Configuration: analysis thresholds, curation policy, server settings.

One TOML file configures everything; a handful of SIGHTLINE_* environment
variables override the common deployment knobs. All reason thresholds are
exposed because they are heuristic defaults, not measured constants.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

try:
    import tomllib  # py311+
except ModuleNotFoundError:  # pragma: no cover - py310 path
    import tomli as tomllib


@dataclass(frozen=True)
class AnalysisConfig:
    """Timeline segmentation, scoring weights, and reason thresholds."""

    min_segment_ms: int = 3000       # coalesce boundaries that would create shorter pieces
    top_k: int = 5                   # orange = the k lowest-scoring segments
    weight_speech_coverage: float = 0.5
    weight_informativeness: float = 0.25
    weight_shot_stability: float = 0.25
    # reason thresholds (R1..R5); R6/R7 are structural and have no threshold
    no_speech_coverage_max: float = 0.10   # R1: speech covers < 10% of the segment
    stopword_ratio_min: float = 0.75       # R2: speech present but > 75% stopwords
    shot_rate_window_ms: int = 5000        # R3: more than one cut per this window
    entity_count_min: int = 5              # R4: >= 5 distinct visual entities
    undescribed_entity_min: int = 2        # R5: >= 2 entities never named in speech


@dataclass(frozen=True)
class CurationPolicy:
    """Accessible-list admission policy."""

    min_similarity: float = 0.30
    # None = use the segment containing the anchor; the scalar is both the
    # fallback window when no analysis exists and an explicit override.
    window_ms: int | None = None
    fallback_window_ms: int = 15000


@dataclass(frozen=True)
class SimilarityConfig:
    """External sentence-similarity provider; lexical cosine is the default."""

    provider_url: str | None = None
    timeout_s: float = 2.0
    fallback_to_lexical: bool = True


@dataclass(frozen=True)
class ServerConfig:
    host: str = "127.0.0.1"
    port: int = 8767
    data_dir: str = "./sightline-data"


@dataclass(frozen=True)
class AppConfig:
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    curation: CurationPolicy = field(default_factory=CurationPolicy)
    similarity: SimilarityConfig = field(default_factory=SimilarityConfig)
    server: ServerConfig = field(default_factory=ServerConfig)


_ENV_OVERRIDES = {
    "SIGHTLINE_HOST": ("server", "host", str),
    "SIGHTLINE_PORT": ("server", "port", int),
    "SIGHTLINE_DATA_DIR": ("server", "data_dir", str),
    "SIGHTLINE_SIMILARITY_URL": ("similarity", "provider_url", str),
    "SIGHTLINE_SIMILARITY_FALLBACK": ("similarity", "fallback_to_lexical", lambda v: v.lower() in ("1", "true", "yes")),
}


def _merge_section(default: Any, table: dict) -> Any:
    names = {f.name for f in dataclasses.fields(default)}
    unknown = set(table) - names
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return dataclasses.replace(default, **table)


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> AppConfig:
    """Load an AppConfig from TOML, then apply SIGHTLINE_* env overrides.

    Missing file path raises FileNotFoundError; path=None loads defaults.
    """
    cfg = AppConfig()
    if path is not None:
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
        cfg = AppConfig(
            analysis=_merge_section(cfg.analysis, doc.get("analysis", {})),
            curation=_merge_section(cfg.curation, doc.get("curation", {})),
            similarity=_merge_section(cfg.similarity, doc.get("similarity", {})),
            server=_merge_section(cfg.server, doc.get("server", {})),
        )
        unknown = set(doc) - {"analysis", "curation", "similarity", "server"}
        if unknown:
            raise ValueError(f"unknown config sections: {sorted(unknown)}")

    env = os.environ if env is None else env
    sections: dict[str, Any] = {
        "analysis": cfg.analysis,
        "curation": cfg.curation,
        "similarity": cfg.similarity,
        "server": cfg.server,
    }
    for var, (section, key, conv) in _ENV_OVERRIDES.items():
        if var in env:
            sections[section] = dataclasses.replace(sections[section], **{key: conv(env[var])})
    return AppConfig(**sections)


def validate_config(cfg: AppConfig) -> list[str]:
    """Return a list of human-readable problems; empty means valid."""
    problems = []
    a = cfg.analysis
    if a.min_segment_ms <= 0:
        problems.append("analysis.min_segment_ms must be positive")
    if a.top_k < 1:
        problems.append("analysis.top_k must be >= 1")
    weights = (a.weight_speech_coverage, a.weight_informativeness, a.weight_shot_stability)
    if any(w < 0 for w in weights) or sum(weights) <= 0:
        problems.append("analysis score weights must be non-negative and sum > 0")
    if not 0.0 <= a.no_speech_coverage_max <= 1.0:
        problems.append("analysis.no_speech_coverage_max must be in [0,1]")
    if not 0.0 <= a.stopword_ratio_min <= 1.0:
        problems.append("analysis.stopword_ratio_min must be in [0,1]")
    if not 0.0 <= cfg.curation.min_similarity <= 1.0:
        problems.append("curation.min_similarity must be in [0,1]")
    if not 1 <= cfg.server.port <= 65535:
        problems.append("server.port must be in [1,65535]")
    return problems
