"""HTTP service: analysis, commenting, suggestions, curation, playback, and
onboarding/profile endpoints, backed by the embedded append-only store.

Determinism contract: every GET is rendered from persisted payloads with one
canonical serializer, so restarting the service and replaying the store
yields byte-identical responses. Comment submission is serialized per video;
analysis reads run lock-free on immutable snapshots.
"""

from __future__ import annotations

import hashlib
import json
import secrets
import threading
import time
from collections import defaultdict
from importlib import resources
from typing import Optional

from fastapi import Depends, FastAPI, Header, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import analysis as gap
from .captions import CaptionFormat, parse_captions
from .comments import Comment, analyze_comment, nudge_draft, parse_anchor
from .config import AppConfig
from .curation import HttpSimilarity, LexicalSimilarity, SimilarityProvider, curate, suggest
from .errors import (
    DuplicateComment,
    HintOnUnlabeledSegment,
    MalformedTimestamp,
    NonPositiveDuration,
    OutOfRangeTime,
    SightlineError,
    SimilarityUnavailable,
    UnknownVideo,
    VideoNotAnalyzed,
)
from .ingest import record_from_payload, record_from_sidecar, record_to_payload
from .playback import build_manifest, manifest_to_payload
from .store import Store
from .textutils import extract_keywords

_PBKDF2_ITERATIONS = 50_000


class _AuthRequired(Exception):
    """Raised by the auth dependency; rendered as a 401."""

_STATUS_BY_ERROR = {
    UnknownVideo: 404,
    VideoNotAnalyzed: 404,
    HintOnUnlabeledSegment: 404,
    DuplicateComment: 409,
    SimilarityUnavailable: 503,
    MalformedTimestamp: 400,
    OutOfRangeTime: 400,
    NonPositiveDuration: 400,
}


def canonical_json(payload: dict) -> bytes:
    """The one serializer used for every response body."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(canonical_json(payload), status_code=status_code, media_type="application/json")


def _error(status_code: int, error: str, message: str) -> Response:
    return _json_response({"error": error, "message": message}, status_code)


def _hash_secret(salt: str, value: str) -> str:
    return hashlib.sha256((salt + value).encode("utf-8")).hexdigest()


def _hash_password(salt: str, password: str) -> str:
    return hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), salt.encode("utf-8"), _PBKDF2_ITERATIONS
    ).hex()


class ServiceState:
    """In-memory view over the store, rebuilt by replay at startup."""

    def __init__(self, config: AppConfig):
        self.config = config
        self.store = Store(config.server.data_dir)
        self.records = {}            # video_id -> VideoRecord
        self.analyses = {}           # video_id -> VideoAnalysis
        self.analysis_payloads = {}  # video_id -> persisted analysis JSON dict
        self.comments = defaultdict(list)  # video_id -> [comment payload], submission order
        self.users = {}              # user_id -> user payload
        self.video_locks = defaultdict(threading.Lock)
        self.similarity: SimilarityProvider = self._build_similarity()
        self._replay()

    def _build_similarity(self) -> SimilarityProvider:
        sim = self.config.similarity
        if sim.provider_url:
            fallback = LexicalSimilarity() if sim.fallback_to_lexical else None
            return HttpSimilarity(sim.provider_url, sim.timeout_s, fallback)
        return LexicalSimilarity()

    def _replay(self) -> None:
        for video_id, payload in self.store.items("video"):
            self.records[video_id] = record_from_payload(payload)
        for video_id, payload in self.store.items("analysis"):
            self.analysis_payloads[video_id] = payload
            self.analyses[video_id] = gap.analysis_from_payload(payload)
        for _, payload in self.store.items("comment"):
            self.comments[payload["video_id"]].append(payload)
        for user_id, payload in self.store.items("user"):
            self.users[user_id] = payload

    # --- domain helpers ---

    def require_video(self, video_id: str):
        if video_id not in self.analyses:
            raise UnknownVideo(f"no video {video_id!r}")
        return self.records[video_id], self.analyses[video_id]

    def accepted_comments(self, video_id: str) -> list[Comment]:
        return [
            Comment(
                comment_id=c["comment_id"],
                video_id=video_id,
                author_id=c["author_id"],
                raw_text=c["text"],
                anchor=c["anchor_ms"],
                created_at=c["created_at"],
            )
            for c in self.comments[video_id]
            if c["decision"] == "accepted"
        ]

    def context_text(self, video_id: str, t: Optional[int]) -> str:
        """Speech text of the segment containing t (for comment classification)."""
        if t is None:
            return ""
        record, analysis = self.records[video_id], self.analyses[video_id]
        if not 0 <= t <= analysis.duration:
            return ""
        seg = analysis.segment_at(t)
        return " ".join(c.text for c in record.speech_in(seg.start, seg.end))

    def history(self, user_id: str) -> list[str]:
        out = []
        for payloads in self.comments.values():
            out.extend(c["comment_id"] for c in payloads if c["author_id"] == user_id)
        return sorted(out)


# --- request bodies ----------------------------------------------------------


class CaptionsIn(BaseModel):
    format: str  # "srt" | "vtt"
    content: Optional[str] = None
    path: Optional[str] = None


class VideoIn(BaseModel):
    sidecar: dict
    captions: Optional[CaptionsIn] = None


class DraftCheckIn(BaseModel):
    draft: str
    playhead_ms: int = 0


class CommentIn(BaseModel):
    text: str
    comment_id: Optional[str] = None


class UserIn(BaseModel):
    display_name: str
    password: str


class LoginIn(BaseModel):
    user_id: str
    password: str


def create_app(config: AppConfig | None = None) -> FastAPI:
    config = config or AppConfig()
    app = FastAPI(title="sightline", version="0.1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    state = ServiceState(config)
    app.state.svc = state

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_req: Request, exc: RequestValidationError):
        return _error(400, "MalformedBody", str(exc.errors()[:3]))

    @app.exception_handler(SightlineError)
    async def domain_error(_req: Request, exc: SightlineError):
        status = _STATUS_BY_ERROR.get(type(exc), 400)
        return _error(status, type(exc).__name__, str(exc))

    @app.exception_handler(ValueError)
    async def bad_value(_req: Request, exc: ValueError):
        return _error(400, "InvalidInput", str(exc))

    def authenticate(authorization: str | None = Header(default=None)) -> str:
        if not authorization or not authorization.startswith("Bearer "):
            return ""
        token = authorization.removeprefix("Bearer ").strip()
        user_id, _, _secret = token.partition(".")
        user = state.users.get(user_id)
        if user and _hash_secret(user["token_salt"], token) == user["token_hash"]:
            return user_id
        return ""

    def require_auth(user_id: str = Depends(authenticate)) -> str:
        if not user_id:
            raise _AuthRequired()
        return user_id

    @app.exception_handler(_AuthRequired)
    async def unauthorized(_req: Request, _exc: _AuthRequired):
        return _error(401, "Unauthorized", "missing or invalid bearer token")

    # --- videos and analysis ---

    @app.post("/videos", status_code=201)
    def post_video(body: VideoIn, user_id: str = Depends(require_auth)):
        cues = []
        if body.captions is not None:
            fmt = CaptionFormat(body.captions.format.lower())
            if body.captions.content is not None:
                raw: bytes | str = body.captions.content
            elif body.captions.path:
                with open(body.captions.path, "rb") as fh:
                    raw = fh.read()
            else:
                return _error(400, "MalformedBody", "captions need either content or path")
            cues = parse_captions(raw, fmt)
        record = record_from_sidecar(body.sidecar, cues)
        analysis = gap.analyze(record, config.analysis)
        payload = gap.analysis_to_payload(analysis)

        video_id = record.video_id
        with state.video_locks[video_id]:
            state.store.append("video", video_id, record_to_payload(record))
            state.store.append("analysis", video_id, payload)
            state.records[video_id] = record
            state.analyses[video_id] = analysis
            state.analysis_payloads[video_id] = payload
        return _json_response(payload, 201)

    @app.get("/videos/{video_id}/segments")
    def get_segments(video_id: str):
        state.require_video(video_id)
        return _json_response(state.analysis_payloads[video_id])

    @app.get("/videos/{video_id}/hints")
    def get_hints(video_id: str, t: int):
        _, analysis = state.require_video(video_id)
        if not 0 <= t <= analysis.duration:
            # no segment exists at t, so no hint resource either
            return _error(404, "OutOfRangeTime", f"t={t} outside [0,{analysis.duration}]")
        idx = analysis.segment_index_at(t)
        segment = analysis.segments[idx]
        messages = gap.popup_messages(segment)  # raises on unlabeled segments
        return _json_response(
            {
                "video_id": video_id,
                "segment_ref": idx,
                "start_ms": segment.start,
                "end_ms": segment.end,
                "tier": segment.tier.value,
                "reasons": [c for c in gap.REASON_ORDER if c in segment.reasons],
                "hints": gap.hint_for(segment),
                "messages": messages,
            }
        )

    # --- drafting ---

    @app.post("/videos/{video_id}/draft-check")
    def draft_check(video_id: str, body: DraftCheckIn):
        _, analysis = state.require_video(video_id)
        nudges = nudge_draft(body.draft, body.playhead_ms, analysis)
        anchored = analyze_comment(
            body.draft or " ",
            analysis.duration,
            state.context_text(video_id, body.playhead_ms),
        )
        return _json_response(
            {
                "nudges": [
                    {"kind": n.kind.value, "message": n.message, "target": n.target}
                    for n in nudges
                ],
                "anchor_ms": anchored.anchor,
                "category": anchored.category.value,
            }
        )

    @app.get("/videos/{video_id}/suggestions")
    def get_suggestions(video_id: str, t: int, draft: str = ""):
        record, analysis = state.require_video(video_id)
        results = suggest(
            extract_keywords(draft),
            t,
            record,
            analysis,
            state.accepted_comments(video_id),
            policy=config.curation,
        )
        return _json_response(
            {
                "video_id": video_id,
                "t_ms": t,
                "suggestions": [
                    {
                        "source": s.source,
                        "ref_id": s.ref_id,
                        "text": s.text,
                        "anchor_ms": s.anchor_ms,
                        "relevance": s.relevance,
                    }
                    for s in results
                ],
            }
        )

    # --- comments ---

    @app.post("/videos/{video_id}/comments")
    def post_comment(video_id: str, body: CommentIn, user_id: str = Depends(require_auth)):
        record, analysis = state.require_video(video_id)
        if not body.text.strip():
            return _error(400, "MalformedBody", "comment text is empty")
        with state.video_locks[video_id]:
            existing = {c["comment_id"] for c in state.comments[video_id]}
            comment_id = body.comment_id or f"c{len(existing) + 1:04d}"
            if comment_id in existing:
                raise DuplicateComment(f"comment {comment_id!r} already exists")

            anchored = parse_anchor(body.text, analysis.duration)
            context = state.context_text(video_id, anchored[0] if anchored else None)
            checked = analyze_comment(body.text, analysis.duration, context)
            decision = curate(
                checked,
                body.text,
                record,
                analysis,
                policy=config.curation,
                provider=state.similarity,
            )
            payload = {
                "comment_id": comment_id,
                "video_id": video_id,
                "author_id": user_id,
                "text": body.text,
                "anchor_ms": checked.anchor,
                "category": checked.category.value,
                "decision": decision.label,
                "reason": decision.reason,
                "created_at": time.time(),
            }
            # single append = the comment, its analysis, and the decision are atomic
            state.store.append("comment", f"{video_id}/{comment_id}", payload)
            state.comments[video_id].append(payload)
        return _json_response(
            {
                "comment_id": comment_id,
                "decision": decision.label,
                "reason": decision.reason,
                "category": checked.category.value,
                "anchor_ms": checked.anchor,
            }
        )

    @app.get("/videos/{video_id}/accessible-comments")
    def get_accessible(video_id: str):
        state.require_video(video_id)
        ordered = sorted(
            (c for c in state.comments[video_id] if c["decision"] == "accepted"),
            key=lambda c: (c["anchor_ms"], c["created_at"]),
        )
        return _json_response(
            {
                "video_id": video_id,
                "comments": [
                    {
                        "comment_id": c["comment_id"],
                        "anchor_ms": c["anchor_ms"],
                        "text": c["text"],
                        "category": c["category"],
                        "author_id": c["author_id"],
                    }
                    for c in ordered
                ],
            }
        )

    @app.get("/videos/{video_id}/playback-manifest")
    def get_manifest(video_id: str, auto_pause: bool = True):
        _, analysis = state.require_video(video_id)
        manifest = build_manifest(analysis, state.accepted_comments(video_id), auto_pause)
        return _json_response(manifest_to_payload(manifest))

    # --- users, auth, onboarding ---

    @app.post("/users", status_code=201)
    def post_user(body: UserIn):
        if not body.display_name.strip() or not body.password:
            return _error(400, "MalformedBody", "display_name and password are required")
        user_id = f"u{secrets.token_hex(4)}"
        while user_id in state.users:
            user_id = f"u{secrets.token_hex(4)}"
        token = f"{user_id}.{secrets.token_urlsafe(24)}"
        password_salt, token_salt = secrets.token_hex(8), secrets.token_hex(8)
        payload = {
            "user_id": user_id,
            "display_name": body.display_name,
            "password_salt": password_salt,
            "password_hash": _hash_password(password_salt, body.password),
            "token_salt": token_salt,
            "token_hash": _hash_secret(token_salt, token),
        }
        state.store.append("user", user_id, payload)
        state.users[user_id] = payload
        return _json_response({"user_id": user_id, "token": token}, 201)

    @app.post("/auth/login")
    def login(body: LoginIn):
        user = state.users.get(body.user_id)
        if not user or _hash_password(user["password_salt"], body.password) != user["password_hash"]:
            return _error(401, "Unauthorized", "unknown user or wrong password")
        token = f"{body.user_id}.{secrets.token_urlsafe(24)}"
        token_salt = secrets.token_hex(8)
        payload = dict(user, token_salt=token_salt, token_hash=_hash_secret(token_salt, token))
        state.store.append("user", body.user_id, payload)
        state.users[body.user_id] = payload
        return _json_response({"user_id": body.user_id, "token": token})

    @app.get("/users/me/history")
    def my_history(user_id: str = Depends(require_auth)):
        return _json_response(
            {
                "user_id": user_id,
                "display_name": state.users[user_id]["display_name"],
                "comment_ids": state.history(user_id),
            }
        )

    @app.get("/onboarding/{page}")
    def onboarding(page: str):
        doc = json.loads(
            resources.files("sightline").joinpath("data/onboarding.json").read_text("utf-8")
        )
        if page not in doc:
            return _error(404, "UnknownPage", f"no onboarding page {page!r}")
        return _json_response(doc[page])

    @app.get("/health")
    def health():
        return _json_response({"status": "ok", "videos": len(state.analyses)})

    return app
