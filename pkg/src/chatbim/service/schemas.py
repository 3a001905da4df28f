"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CreateSessionRequest(BaseModel):
    seed: int = 0


class CreateSessionResponse(BaseModel):
    session_id: str


class MessageRequest(BaseModel):
    text: str = Field(min_length=1)


class SelectionRequest(BaseModel):
    uuids: list[str]


class SelectionResponse(BaseModel):
    selected: list[str]


class MetricsResponse(BaseModel):
    issue_series: list[int]
    pass_rate: float | None


class SessionInfoResponse(BaseModel):
    session_id: str
    status: str
    event_count: int


class ErrorResponse(BaseModel):
    detail: str
