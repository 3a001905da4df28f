"""Agent turn functions: one call into the backend per role, plus the
function-calling handshake that lets the instruction enhancer consult the
architect for a building design before answering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import BackendError, MalformedToolCall
from ..interpreter.parser import ScriptSource, strip_code_fence
from .backend import ChatBackend, ChatMessage, ChatRequest, ToolDeclaration
from .templates import PromptTemplate, Role, TOOLS_PLACEHOLDER, load_templates, render

ARCHITECT_TOOL = ToolDeclaration(
    name="Architect",
    description=(
        "Generate a floor or building design in structured text format based on the query, "
        "providing architectural knowledge."
    ),
    parameters={
        "type": "object",
        "properties": {
            "query": {
                "type": "string",
                "description": "The requirements for the design, the more detailed the better.",
            }
        },
        "required": ["query"],
    },
)

# How often the enhancer may call out to the architect in one turn before we
# force a plain-text answer.
MAX_ARCHITECT_CONSULTATIONS = 2


@dataclass
class Consultation:
    query: str
    design: str


@dataclass
class EnhancerResult:
    enhanced: str
    consultations: list[Consultation] = field(default_factory=list)


class AgentSuite:
    """The four roles bound to one backend and one template set."""

    def __init__(self, backend: ChatBackend, templates: dict[Role, PromptTemplate] | None = None):
        self.backend = backend
        self.templates = templates if templates is not None else load_templates()

    # -- architect -----------------------------------------------------------

    def architect_turn(self, query: str) -> str:
        prompt = render(self.templates[Role.ARCHITECT], {"task": query})
        response = self.backend.complete(
            ChatRequest(messages=(ChatMessage("user", prompt),), agent=Role.ARCHITECT.value)
        )
        return response.content

    # -- instruction enhancer -----------------------------------------------------

    def instruction_enhancer_turn(self, instruction: str, catalog: str, chat_history: str) -> EnhancerResult:
        prompt = render(
            self.templates[Role.INSTRUCTION_ENHANCER],
            {"task": instruction, "chat_history": chat_history, TOOLS_PLACEHOLDER: catalog},
        )
        messages: list[ChatMessage] = [ChatMessage("user", prompt)]
        result = EnhancerResult(enhanced="")
        while True:
            may_consult = len(result.consultations) < MAX_ARCHITECT_CONSULTATIONS
            response = self.backend.complete(
                ChatRequest(
                    messages=tuple(messages),
                    agent=Role.INSTRUCTION_ENHANCER.value,
                    tool_declarations=(ARCHITECT_TOOL,) if may_consult else (),
                )
            )
            if response.tool_calls and may_consult:
                call = response.tool_calls[0]
                if call.name != ARCHITECT_TOOL.name:
                    raise MalformedToolCall(f"unexpected tool {call.name!r}")
                try:
                    arguments = json.loads(call.arguments)
                    query = arguments["query"]
                except (ValueError, KeyError, TypeError) as exc:
                    raise MalformedToolCall(f"bad Architect arguments: {exc}") from exc
                design = self.architect_turn(query)
                result.consultations.append(Consultation(query=query, design=design))
                messages.append(ChatMessage("assistant", response.content, tool_calls=(call,)))
                messages.append(
                    ChatMessage("tool", design, tool_call_id=call.id, name=ARCHITECT_TOOL.name)
                )
                continue
            if response.content:
                result.enhanced = response.content
                return result
            raise BackendError("instruction enhancer got neither text nor a usable tool call")

    # -- programmer -------------------------------------------------------------

    def programmer_turn(self, task: str, catalog: str, chat_history: str) -> ScriptSource:
        prompt = render(
            self.templates[Role.PROGRAMMER],
            {"task": task, "chat_history": chat_history, TOOLS_PLACEHOLDER: catalog},
        )
        response = self.backend.complete(
            ChatRequest(messages=(ChatMessage("user", prompt),), agent=Role.PROGRAMMER.value)
        )
        return strip_code_fence(response.content)

    # -- reviewer ----------------------------------------------------------------

    def reviewer_turn(self, code: str, issues_text: str, catalog: str) -> str:
        if not issues_text.strip():
            raise ValueError("reviewer_turn requires a nonempty issue report")
        prompt = render(
            self.templates[Role.REVIEWER],
            {"code": code, "issues": issues_text, TOOLS_PLACEHOLDER: catalog},
        )
        response = self.backend.complete(
            ChatRequest(messages=(ChatMessage("user", prompt),), agent=Role.REVIEWER.value)
        )
        return response.content
