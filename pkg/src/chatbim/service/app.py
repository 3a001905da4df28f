"""HTTP session service: the chat UI's backend.

One session owns one model; requests against a session are serialized (409
when a turn is in flight). Instruction turns stream agent events back as
line-delimited JSON over a held response, which both the browser client and
curl can consume.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, StreamingResponse

from ..agents.backend import ChatBackend, HttpBackendConfig, HttpChatBackend, TranscriptLog
from ..agents.mock import MockChatBackend, MockTranscript
from ..checker.bcf import export_bcf_lite
from ..checker.rules import catalog_manifest
from ..errors import UnknownElement
from ..kernel.ifcjson import model_serialize
from ..kernel.mesh import mesh_export
from ..orchestrator.engine import (
    QUALITY_ITERATION_CAP,
    SELF_REFLECTION_CAP,
    TurnEngine,
    metrics_snapshot,
)
from ..orchestrator.events import EventKind
from ..orchestrator.session import Session, SessionStatus
from .schemas import (
    CreateSessionRequest,
    CreateSessionResponse,
    MessageRequest,
    MetricsResponse,
    SelectionRequest,
    SelectionResponse,
    SessionInfoResponse,
)


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    backend_url: str = ""
    backend_model: str = ""
    backend_key: str = ""
    mock_transcript_path: str | None = None
    check_via_serialization: bool = False
    corpus_path: str | None = None
    transcript_log_path: str | None = None
    backend_timeout_seconds: float = 120.0
    backend_max_tokens: int | None = None
    self_reflection_cap: int = SELF_REFLECTION_CAP
    quality_iteration_cap: int = QUALITY_ITERATION_CAP

    def __repr__(self) -> str:  # keep the key out of logs and tracebacks
        masked = "***" if self.backend_key else ""
        return (
            f"ServiceConfig(host={self.host!r}, port={self.port}, backend_url={self.backend_url!r}, "
            f"backend_model={self.backend_model!r}, backend_key={masked!r}, "
            f"mock_transcript_path={self.mock_transcript_path!r})"
        )


@dataclass
class _Entry:
    session: Session
    turn_lock: threading.Lock = field(default_factory=threading.Lock)


class SessionRegistry:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self._entries: dict[str, _Entry] = {}
        self._lock = threading.Lock()
        self._mock_transcript: MockTranscript | None = None
        if config.mock_transcript_path:
            self._mock_transcript = MockTranscript.load(Path(config.mock_transcript_path))

    def _new_backend(self) -> ChatBackend | None:
        if self._mock_transcript is not None:
            return MockChatBackend(self._mock_transcript)
        if self.config.backend_url:
            log = (
                TranscriptLog(self.config.transcript_log_path)
                if self.config.transcript_log_path
                else None
            )
            return HttpChatBackend(
                HttpBackendConfig(
                    url=self.config.backend_url,
                    model=self.config.backend_model,
                    api_key=self.config.backend_key,
                    timeout_seconds=self.config.backend_timeout_seconds,
                    max_tokens=self.config.backend_max_tokens,
                ),
                log=log,
            )
        return None

    def create(self, seed: int = 0) -> Session:
        backend = self._new_backend()
        session = Session(
            backend,
            seed=seed,
            check_via_serialization=self.config.check_via_serialization,
        )
        with self._lock:
            self._entries[session.id] = _Entry(session=session)
        return session

    def entry(self, session_id: str) -> _Entry:
        with self._lock:
            entry = self._entries.get(session_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no session {session_id}")
        return entry

    def drop(self, session_id: str) -> None:
        with self._lock:
            entry = self._entries.pop(session_id, None)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no session {session_id}")
        entry.session.status = SessionStatus.TERMINATED


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config if config is not None else ServiceConfig()
    app = FastAPI(title="chatbim", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    registry = SessionRegistry(config)
    app.state.registry = registry

    @app.post("/sessions", response_model=CreateSessionResponse)
    def create_session(request: CreateSessionRequest | None = None):
        seed = request.seed if request is not None else 0
        session = registry.create(seed=seed)
        return CreateSessionResponse(session_id=session.id)

    @app.get("/sessions/{session_id}", response_model=SessionInfoResponse)
    def session_info(session_id: str):
        session = registry.entry(session_id).session
        return SessionInfoResponse(
            session_id=session.id, status=session.status.value, event_count=len(session.events)
        )

    @app.post("/sessions/{session_id}/messages")
    def post_message(session_id: str, request: MessageRequest):
        entry = registry.entry(session_id)
        session = entry.session
        if session.backend is None:
            raise HTTPException(status_code=502, detail="no chat backend configured")
        if not entry.turn_lock.acquire(blocking=False):
            raise HTTPException(status_code=409, detail=f"session {session_id} is busy")
        if session.status == SessionStatus.RUNNING:
            entry.turn_lock.release()
            raise HTTPException(status_code=409, detail=f"session {session_id} is busy")

        start = len(session.events)
        engine = TurnEngine(
            session,
            self_reflection_cap=config.self_reflection_cap,
            quality_iteration_cap=config.quality_iteration_cap,
        )
        # Mark the stream open before the worker exists, so a fast consumer
        # cannot observe the previous turn's completed state and stop early.
        session.begin_turn_stream()

        def run_turn():
            try:
                engine.handle_instruction(request.text)
            except Exception as exc:  # surface, never crash the stream
                session.emit(
                    "system", EventKind.HUMAN_REQUIRED, {"reason": f"internal error: {exc}"}
                )
                session.status = SessionStatus.AWAITING_HUMAN
            finally:
                session.end_turn_stream()
                entry.turn_lock.release()

        worker = threading.Thread(target=run_turn, name=f"turn-{session_id}", daemon=True)
        worker.start()

        def event_lines():
            for event in session.stream_events(since=start):
                yield json.dumps(event.to_dict(), ensure_ascii=False) + "\n"

        return StreamingResponse(event_lines(), media_type="application/x-ndjson")

    @app.get("/sessions/{session_id}/events")
    def list_events(session_id: str, since: int = 0):
        session = registry.entry(session_id).session
        return JSONResponse([e.to_dict() for e in session.events if e.sequence > since])

    @app.get("/sessions/{session_id}/model")
    def get_model(session_id: str):
        session = registry.entry(session_id).session
        return JSONResponse(model_serialize(session.model))

    @app.get("/sessions/{session_id}/model/mesh")
    def get_mesh(session_id: str):
        session = registry.entry(session_id).session
        return JSONResponse(mesh_export(session.model))

    @app.get("/sessions/{session_id}/issues")
    def get_issues(session_id: str):
        session = registry.entry(session_id).session
        if session.latest_report is None:
            return JSONResponse([])
        return JSONResponse(export_bcf_lite(session.latest_report))

    @app.get("/sessions/{session_id}/metrics", response_model=MetricsResponse)
    def get_metrics(session_id: str):
        session = registry.entry(session_id).session
        return MetricsResponse(**metrics_snapshot(session))

    @app.post("/sessions/{session_id}/selection", response_model=SelectionResponse)
    def set_selection(session_id: str, request: SelectionRequest):
        session = registry.entry(session_id).session
        for uid in request.uuids:
            if uid not in session.model.elements:
                raise HTTPException(status_code=400, detail=str(UnknownElement(uid)))
        session.model.selection = set(request.uuids)
        return SelectionResponse(selected=sorted(session.model.selection))

    @app.delete("/sessions/{session_id}")
    def delete_session(session_id: str):
        registry.drop(session_id)
        return JSONResponse({"deleted": session_id})

    @app.get("/rules")
    def rules_manifest():
        return JSONResponse(catalog_manifest())

    return app
