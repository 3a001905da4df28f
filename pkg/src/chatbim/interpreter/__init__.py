from .errors import ErrorKind, ScriptError, ScriptFault
from .evaluator import ExecutionOutcome, Interpreter, StateDictionary
from .parser import IMPORTABLE_MODULES, ScriptSource, parse, parse_result, strip_code_fence

__all__ = [
    "ErrorKind",
    "ExecutionOutcome",
    "IMPORTABLE_MODULES",
    "Interpreter",
    "ScriptError",
    "ScriptFault",
    "ScriptSource",
    "StateDictionary",
    "parse",
    "parse_result",
    "strip_code_fence",
]
