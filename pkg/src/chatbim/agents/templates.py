"""Prompt templates for the four agent roles.

Template bodies live as versioned text files next to this module; rendering
is plain placeholder substitution (`<<name>>`) and fails loudly if any
placeholder is left unfilled.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from ..errors import MissingPlaceholder

PLACEHOLDER_RE = re.compile(r"<<([^<>]+)>>")

TOOLS_PLACEHOLDER = "Tool function names and descriptions"


class Role(str, Enum):
    INSTRUCTION_ENHANCER = "instruction_enhancer"
    ARCHITECT = "architect"
    PROGRAMMER = "programmer"
    REVIEWER = "reviewer"


@dataclass(frozen=True)
class PromptTemplate:
    role: Role
    body: str

    def placeholders(self) -> tuple[str, ...]:
        seen: list[str] = []
        for match in PLACEHOLDER_RE.finditer(self.body):
            if match.group(1) not in seen:
                seen.append(match.group(1))
        return tuple(seen)


def _load(name: str) -> str:
    return resources.files("chatbim.agents").joinpath(f"data/{name}.txt").read_text(encoding="utf-8")


def load_templates() -> dict[Role, PromptTemplate]:
    return {
        Role.INSTRUCTION_ENHANCER: PromptTemplate(Role.INSTRUCTION_ENHANCER, _load("instruction_enhancer")),
        Role.ARCHITECT: PromptTemplate(Role.ARCHITECT, _load("architect")),
        Role.PROGRAMMER: PromptTemplate(Role.PROGRAMMER, _load("programmer")),
        Role.REVIEWER: PromptTemplate(Role.REVIEWER, _load("reviewer")),
    }


def render(template: PromptTemplate, substitutions: dict[str, str]) -> str:
    """Deterministic placeholder substitution; every token must be filled."""
    text = template.body
    for name, value in substitutions.items():
        text = text.replace(f"<<{name}>>", value)
    leftover = PLACEHOLDER_RE.search(text)
    if leftover:
        raise MissingPlaceholder(leftover.group(1))
    return text
