"""Chat backend wire types and the HTTP chat-completions client.

The wire schema is the common chat-completions shape: a messages array,
optional tool declarations, and replies that carry text content and/or
structured tool calls. Every request/response pair can be appended to a
JSON-lines transcript log for audit and replay capture.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

import httpx

from ..errors import BackendError


@dataclass(frozen=True)
class ToolCall:
    id: str
    name: str
    arguments: str  # raw JSON text, parsed by the consumer


@dataclass(frozen=True)
class ChatMessage:
    role: str  # system | user | assistant | tool
    content: str = ""
    tool_calls: tuple[ToolCall, ...] = ()
    tool_call_id: str | None = None
    name: str | None = None

    def to_wire(self) -> dict:
        wire: dict = {"role": self.role, "content": self.content}
        if self.tool_calls:
            wire["tool_calls"] = [
                {
                    "id": call.id,
                    "type": "function",
                    "function": {"name": call.name, "arguments": call.arguments},
                }
                for call in self.tool_calls
            ]
        if self.tool_call_id is not None:
            wire["tool_call_id"] = self.tool_call_id
        if self.name is not None:
            wire["name"] = self.name
        return wire


@dataclass(frozen=True)
class ToolDeclaration:
    name: str
    description: str
    parameters: dict

    def to_wire(self) -> dict:
        return {
            "type": "function",
            "function": {
                "name": self.name,
                "description": self.description,
                "parameters": self.parameters,
            },
        }


@dataclass(frozen=True)
class ChatRequest:
    messages: tuple[ChatMessage, ...]
    agent: str  # which agent role is asking; used for routing and logs
    tool_declarations: tuple[ToolDeclaration, ...] = ()
    temperature: float = 0.0
    model: str = ""


@dataclass(frozen=True)
class ChatResponse:
    content: str = ""
    tool_calls: tuple[ToolCall, ...] = ()


class ChatBackend(Protocol):
    def complete(self, request: ChatRequest) -> ChatResponse: ...


class TranscriptLog:
    """Thread-safe JSON-lines log of every backend exchange."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def record(self, request: ChatRequest, response: ChatResponse) -> None:
        entry = {
            "agent": request.agent,
            "request": {
                "messages": [m.to_wire() for m in request.messages],
                "tools": [t.to_wire() for t in request.tool_declarations],
                "temperature": request.temperature,
                "model": request.model,
            },
            "response": {
                "content": response.content,
                "tool_calls": [
                    {"id": c.id, "name": c.name, "arguments": c.arguments} for c in response.tool_calls
                ],
            },
        }
        line = json.dumps(entry, ensure_ascii=False)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as handle:
                handle.write(line + "\n")


@dataclass
class HttpBackendConfig:
    url: str
    model: str
    api_key: str = ""
    timeout_seconds: float = 120.0
    max_tokens: int | None = None

    def __repr__(self) -> str:  # the key must never leak into logs
        masked = "***" if self.api_key else ""
        return f"HttpBackendConfig(url={self.url!r}, model={self.model!r}, api_key={masked!r})"


class HttpChatBackend:
    """Blocking chat-completions client over HTTP."""

    def __init__(self, config: HttpBackendConfig, log: TranscriptLog | None = None):
        self.config = config
        self.log = log

    def complete(self, request: ChatRequest) -> ChatResponse:
        payload: dict = {
            "model": request.model or self.config.model,
            "messages": [m.to_wire() for m in request.messages],
            "temperature": request.temperature,
        }
        if request.tool_declarations:
            payload["tools"] = [t.to_wire() for t in request.tool_declarations]
        if self.config.max_tokens:
            payload["max_tokens"] = self.config.max_tokens
        headers = {"Content-Type": "application/json"}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        try:
            reply = httpx.post(
                self.config.url, json=payload, headers=headers, timeout=self.config.timeout_seconds
            )
            reply.raise_for_status()
            body = reply.json()
        except httpx.HTTPError as exc:
            raise BackendError(f"chat backend request failed: {exc}") from exc
        except ValueError as exc:
            raise BackendError(f"chat backend returned invalid JSON: {exc}") from exc
        try:
            message = body["choices"][0]["message"]
        except (KeyError, IndexError, TypeError) as exc:
            raise BackendError(f"chat backend reply missing choices: {exc}") from exc
        calls = tuple(
            ToolCall(
                id=str(raw.get("id", "")),
                name=str(raw.get("function", {}).get("name", "")),
                arguments=str(raw.get("function", {}).get("arguments", "")),
            )
            for raw in message.get("tool_calls") or ()
        )
        response = ChatResponse(content=message.get("content") or "", tool_calls=calls)
        if self.log:
            self.log.record(request, response)
        return response
