"""Structured script errors fed back to the code-repair loop."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ErrorKind(str, Enum):
    SYNTAX_ERROR = "SyntaxError"
    SYNTAX_NOT_ALLOWED = "SyntaxNotAllowed"
    WHITELIST_VIOLATION = "WhitelistViolation"
    TOOL_ERROR = "ToolError"
    RUNTIME_ERROR = "RuntimeError"


@dataclass(frozen=True)
class ScriptError:
    """A located failure in a script. Line and column are 1-based and point
    into the fence-stripped source."""

    kind: ErrorKind
    message: str
    line: int
    column: int
    offending_snippet: str

    def render(self) -> str:
        return (
            f"{self.kind.value} at line {self.line}, column {self.column}: {self.message}\n"
            f"    {self.offending_snippet}"
        )


class ScriptFault(Exception):
    """Internal control-flow wrapper around a ScriptError."""

    def __init__(self, error: ScriptError):
        super().__init__(error.render())
        self.error = error


def fault(kind: ErrorKind, message: str, line: int, column: int, snippet: str) -> ScriptFault:
    return ScriptFault(ScriptError(kind, message, max(line, 1), max(column, 1), snippet))
