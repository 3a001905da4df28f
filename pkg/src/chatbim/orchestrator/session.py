"""Session state: one model, one interpreter state, memories and event log."""

from __future__ import annotations

import threading
import uuid as _uuid
from enum import Enum

from ..agents.backend import ChatBackend
from ..agents.memory import MemoryModule
from ..checker.engine import IssueReport
from ..interpreter.evaluator import Interpreter, StateDictionary
from ..kernel.ifcjson import model_deserialize, model_serialize
from ..kernel.model import Model
from .events import AgentEvent, EventKind

DEFAULT_LAYER_NAME = "Default"


class SessionStatus(str, Enum):
    IDLE = "idle"
    RUNNING = "running"
    AWAITING_HUMAN = "awaiting_human"
    TERMINATED = "terminated"


class Session:
    def __init__(
        self,
        backend: ChatBackend,
        session_id: str | None = None,
        seed: int = 0,
        check_via_serialization: bool = False,
        with_default_layer: bool = True,
    ):
        self.id = session_id if session_id is not None else _uuid.uuid4().hex[:12]
        self.backend = backend
        self.model = Model(seed=seed)
        if with_default_layer:
            self.model.add_layer(DEFAULT_LAYER_NAME, 0.0, 1)
        self.state = StateDictionary()
        self.interpreter = Interpreter(self.model, self.state)
        self.memory = MemoryModule()
        self.status = SessionStatus.IDLE
        self.check_via_serialization = check_via_serialization
        self.iteration_log: list[dict] = []
        self.latest_report: IssueReport | None = None
        self.turn_issue_series: list[int] = []
        self.events: list[AgentEvent] = []
        self._events_cond = threading.Condition()
        self._turn_complete = True

    # -- events ----------------------------------------------------------------

    def emit(self, role: str, kind: EventKind, payload: dict) -> AgentEvent:
        with self._events_cond:
            event = AgentEvent(sequence=len(self.events) + 1, role=role, kind=kind, payload=payload)
            self.events.append(event)
            self._events_cond.notify_all()
        return event

    def begin_turn_stream(self) -> None:
        with self._events_cond:
            self._turn_complete = False
            self._events_cond.notify_all()

    def end_turn_stream(self) -> None:
        with self._events_cond:
            self._turn_complete = True
            self._events_cond.notify_all()

    def stream_events(self, since: int = 0, poll_seconds: float = 0.1):
        """Yield events after `since`; ends once the running turn completes."""
        cursor = since
        while True:
            with self._events_cond:
                while len(self.events) <= cursor and not self._turn_complete:
                    self._events_cond.wait(timeout=poll_seconds)
                fresh = self.events[cursor:]
                done = self._turn_complete and len(self.events) == cursor + len(fresh)
            for event in fresh:
                cursor += 1
                yield event
            if done and cursor >= len(self.events):
                return

    # -- checking model state ---------------------------------------------------

    def checkable_model(self) -> Model:
        """The model the checker sees; optionally forced through the export
        path to exercise serialization."""
        if self.check_via_serialization:
            return model_deserialize(model_serialize(self.model))
        return self.model

    # -- persistence --------------------------------------------------------------

    def snapshot(self) -> dict:
        return {
            "session_id": self.id,
            "status": self.status.value,
            "check_via_serialization": self.check_via_serialization,
            "model": model_serialize(self.model),
            "memory": self.memory.to_payload(),
            "iteration_log": list(self.iteration_log),
            "turn_issue_series": list(self.turn_issue_series),
        }

    @classmethod
    def restore(cls, payload: dict, backend: ChatBackend) -> "Session":
        session = cls(backend, session_id=payload["session_id"], with_default_layer=False)
        session.model = model_deserialize(payload["model"])
        session.interpreter = Interpreter(session.model, session.state)
        session.memory = MemoryModule.from_payload(payload.get("memory", {}))
        session.status = SessionStatus(payload.get("status", "idle"))
        if session.status == SessionStatus.RUNNING:  # a crash mid-turn resumes as idle
            session.status = SessionStatus.IDLE
        session.check_via_serialization = bool(payload.get("check_via_serialization", False))
        session.iteration_log = list(payload.get("iteration_log", []))
        session.turn_issue_series = list(payload.get("turn_issue_series", []))
        return session
