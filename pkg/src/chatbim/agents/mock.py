"""Scripted mock backend for deterministic, offline pipeline runs.

A transcript is an immutable list of canned turns; a MockChatBackend replays
them keyed by (agent role, per-role turn index). Transcripts are shareable;
replay cursors are per backend instance, so each session gets its own.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ScriptExhausted
from .backend import ChatRequest, ChatResponse, ToolCall


@dataclass(frozen=True)
class CannedTurn:
    role: str
    content: str = ""
    tool_calls: tuple[ToolCall, ...] = ()
    expect_contains: str | None = None  # optional request sanity probe


@dataclass(frozen=True)
class MockTranscript:
    turns: tuple[CannedTurn, ...]

    @classmethod
    def from_payload(cls, payload: list[dict]) -> "MockTranscript":
        turns = []
        for raw in payload:
            calls = tuple(
                ToolCall(
                    id=str(c.get("id", f"call_{i}")),
                    name=str(c["name"]),
                    arguments=str(c.get("arguments", "{}")),
                )
                for i, c in enumerate(raw.get("tool_calls") or ())
            )
            turns.append(
                CannedTurn(
                    role=str(raw["role"]),
                    content=str(raw.get("content", "")),
                    tool_calls=calls,
                    expect_contains=raw.get("expect_contains"),
                )
            )
        return cls(turns=tuple(turns))

    @classmethod
    def load(cls, path: str | Path) -> "MockTranscript":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls.from_payload(payload)

    def for_role(self, role: str) -> list[CannedTurn]:
        return [turn for turn in self.turns if turn.role == role]


class MockChatBackend:
    """Replays a transcript; raises ScriptExhausted past its end."""

    def __init__(self, transcript: MockTranscript):
        self.transcript = transcript
        self.diagnostics: list[str] = []
        self.requests: list[ChatRequest] = []
        self._cursors: dict[str, int] = {}
        self._lock = threading.Lock()

    def calls_for(self, role: str) -> int:
        return self._cursors.get(role, 0)

    def complete(self, request: ChatRequest) -> ChatResponse:
        with self._lock:
            self.requests.append(request)
            turns = self.transcript.for_role(request.agent)
            index = self._cursors.get(request.agent, 0)
            if index >= len(turns):
                raise ScriptExhausted(
                    f"mock transcript has no turn {index} for role {request.agent!r}"
                )
            self._cursors[request.agent] = index + 1
            turn = turns[index]
        if turn.expect_contains:
            joined = "\n".join(m.content for m in request.messages)
            if turn.expect_contains not in joined:
                self.diagnostics.append(
                    f"turn {index} for {request.agent}: request missing expected text "
                    f"{turn.expect_contains!r}"
                )
        return ChatResponse(content=turn.content, tool_calls=turn.tool_calls)
