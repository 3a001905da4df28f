from .backend import (
    ChatBackend,
    ChatMessage,
    ChatRequest,
    ChatResponse,
    HttpBackendConfig,
    HttpChatBackend,
    ToolCall,
    ToolDeclaration,
    TranscriptLog,
)
from .memory import MemoryModule
from .mock import CannedTurn, MockChatBackend, MockTranscript
from .roles import ARCHITECT_TOOL, AgentSuite, Consultation, EnhancerResult
from .templates import PromptTemplate, Role, TOOLS_PLACEHOLDER, load_templates, render

__all__ = [
    "ARCHITECT_TOOL",
    "AgentSuite",
    "CannedTurn",
    "ChatBackend",
    "ChatMessage",
    "ChatRequest",
    "ChatResponse",
    "Consultation",
    "EnhancerResult",
    "HttpBackendConfig",
    "HttpChatBackend",
    "MemoryModule",
    "MockChatBackend",
    "MockTranscript",
    "PromptTemplate",
    "Role",
    "TOOLS_PLACEHOLDER",
    "ToolCall",
    "ToolDeclaration",
    "TranscriptLog",
    "load_templates",
    "render",
]
