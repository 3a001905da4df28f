from .engine import QUALITY_ITERATION_CAP, SELF_REFLECTION_CAP, TurnEngine, metrics_snapshot
from .events import AgentEvent, EventKind
from .session import DEFAULT_LAYER_NAME, Session, SessionStatus

__all__ = [
    "AgentEvent",
    "DEFAULT_LAYER_NAME",
    "EventKind",
    "QUALITY_ITERATION_CAP",
    "SELF_REFLECTION_CAP",
    "Session",
    "SessionStatus",
    "TurnEngine",
    "metrics_snapshot",
]
