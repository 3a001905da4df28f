"""Conversation memory: a global chat record plus a loop-local scratchpad.

Global memory keeps one (instruction, enhanced instruction, code) triple per
successful user turn. Local memory holds the reviewer/programmer exchanges of
one optimization loop and is purged whenever that loop exits. Only error-free
code is ever stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class GlobalEntry:
    instruction: str
    enhanced: str
    code: str


@dataclass
class LocalEntry:
    suggestion: str  # reviewer guidance that triggered the revision ("" for the seed code)
    code: str


@dataclass
class MemoryModule:
    global_entries: list[GlobalEntry] = field(default_factory=list)
    local_entries: list[LocalEntry] = field(default_factory=list)

    # -- global ----------------------------------------------------------

    def remember_turn(self, instruction: str, enhanced: str, code: str) -> None:
        self.global_entries.append(GlobalEntry(instruction, enhanced, code))

    def chat_history_for_enhancer(self) -> str:
        lines = []
        for entry in self.global_entries:
            lines.append(f"User: {entry.instruction}")
            lines.append(f"Instruction Enhancer: {entry.enhanced}")
        return "\n".join(lines)

    def chat_history_for_programmer(self) -> str:
        lines = []
        for entry in self.global_entries:
            lines.append(f"Instruction Enhancer: {entry.enhanced}")
            lines.append(f"Programmer: {entry.code}")
        return "\n".join(lines)

    # -- loop-local ---------------------------------------------------------

    def remember_loop_code(self, suggestion: str, code: str) -> None:
        self.local_entries.append(LocalEntry(suggestion, code))

    def loop_code_text(self) -> str:
        return "\n\n".join(entry.code for entry in self.local_entries)

    def purge_local(self) -> None:
        self.local_entries.clear()

    def to_payload(self) -> dict:
        return {
            "global": [
                {"instruction": e.instruction, "enhanced": e.enhanced, "code": e.code}
                for e in self.global_entries
            ],
            "local": [{"suggestion": e.suggestion, "code": e.code} for e in self.local_entries],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "MemoryModule":
        memory = cls()
        for raw in payload.get("global", []):
            memory.remember_turn(raw["instruction"], raw["enhanced"], raw["code"])
        for raw in payload.get("local", []):
            memory.remember_loop_code(raw["suggestion"], raw["code"])
        return memory
