"""Events emitted while a session processes an instruction.

The stream drives the chat UI (each role renders in its own color) and the
audit log; sequence numbers are strictly increasing per session.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class EventKind(str, Enum):
    MESSAGE = "message"
    CODE = "code"
    INTERPRETER_RESULT = "interpreter_result"
    CHECKER_REPORT = "checker_report"
    LOOP_TRANSITION = "loop_transition"
    HUMAN_REQUIRED = "human_required"


@dataclass(frozen=True)
class AgentEvent:
    sequence: int
    role: str  # user | instruction_enhancer | architect | programmer | reviewer | interpreter | checker | system
    kind: EventKind
    payload: dict

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "role": self.role,
            "kind": self.kind.value,
            "payload": self.payload,
        }
