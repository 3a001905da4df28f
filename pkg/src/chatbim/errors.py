"""Exception types shared across the kernel, tools, agents and service."""


class ChatBimError(Exception):
    """Base class for all errors raised by this package."""


class KernelError(ChatBimError):
    """Base class for model-kernel failures."""


class UnknownElement(KernelError):
    def __init__(self, uuid: str):
        super().__init__(f"no element with uuid {uuid!r}")
        self.uuid = uuid


class UnknownLayer(KernelError):
    def __init__(self, name: str):
        super().__init__(f"no story layer named {name!r}")
        self.name = name


class DuplicateLayerName(KernelError):
    def __init__(self, name: str):
        super().__init__(f"story layer name {name!r} already in use")
        self.name = name


class LayerDeletionForbidden(KernelError):
    def __init__(self, uuid: str):
        super().__init__(f"story layers cannot be deleted ({uuid})")
        self.uuid = uuid


class InvalidArgument(KernelError):
    pass


class UnknownStyle(KernelError):
    def __init__(self, style: str, allowed: tuple[str, ...]):
        super().__init__(f"unknown style {style!r}; available: {list(allowed)}")
        self.style = style


class IndexOutOfRange(KernelError):
    pass


class SchemaViolation(ChatBimError):
    """Raised when a document fails validation; carries a JSON-path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


class MissingPlaceholder(ChatBimError):
    def __init__(self, name: str):
        super().__init__(f"placeholder <<{name}>> was not filled")
        self.name = name


class BackendError(ChatBimError):
    """Transport, auth or protocol failure while talking to a chat backend."""


class MalformedToolCall(ChatBimError):
    """A function-calling reply carried arguments that are not valid JSON."""


class ScriptExhausted(BackendError):
    """The scripted mock backend ran out of canned turns for a role."""


class SessionBusy(ChatBimError):
    def __init__(self, session_id: str):
        super().__init__(f"session {session_id} is already processing an instruction")
        self.session_id = session_id


class UnknownSession(ChatBimError):
    def __init__(self, session_id: str):
        super().__init__(f"no session {session_id}")
        self.session_id = session_id
