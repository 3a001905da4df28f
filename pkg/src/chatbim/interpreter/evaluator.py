"""Tree-walking evaluator for modeling scripts.

Callables resolve only to the bound toolset, user functions defined in the
session, a small builtin whitelist, and the ``math`` module when imported.
Bindings persist across executions in a state dictionary so later turns can
reuse earlier variables. Execution is a pure function of (script, state,
model): no filesystem, network or clock access is reachable.
"""

from __future__ import annotations

import ast
import builtins as _py_builtins
import math
from dataclasses import dataclass, field
from types import MappingProxyType

from ..errors import KernelError
from ..kernel.model import Model
from ..tools.api import ToolApi
from .errors import ErrorKind, ScriptError, ScriptFault, fault
from .parser import IMPORTABLE_MODULES, ScriptSource, parse, strip_code_fence

RANGE_CAP = 100_000
SEQUENCE_REPEAT_CAP = 100_000
POW_EXPONENT_CAP = 10_000
RECURSION_CAP = 64

BUILTIN_WHITELIST = (
    "range",
    "len",
    "enumerate",
    "min",
    "max",
    "abs",
    "round",
    "sum",
    "zip",
    "sorted",
    "int",
    "float",
    "str",
    "list",
    "tuple",
    "print",
)

# Methods scripts may call on builtin values, by receiver type.
METHOD_WHITELIST: dict[type, frozenset[str]] = {
    list: frozenset(
        {"append", "extend", "insert", "pop", "remove", "sort", "reverse", "index", "count", "copy", "clear"}
    ),
    tuple: frozenset({"index", "count"}),
    str: frozenset(
        {
            "upper",
            "lower",
            "title",
            "capitalize",
            "strip",
            "lstrip",
            "rstrip",
            "split",
            "rsplit",
            "join",
            "replace",
            "startswith",
            "endswith",
            "find",
            "format",
            "zfill",
        }
    ),
}

_MATH_NAMESPACE = MappingProxyType(
    {name: getattr(math, name) for name in dir(math) if not name.startswith("_")}
)


@dataclass
class StateDictionary:
    """Session-persistent bindings created by scripts."""

    bindings: dict[str, object] = field(default_factory=dict)

    def clear(self) -> None:
        self.bindings.clear()


@dataclass(frozen=True)
class UserFunction:
    name: str
    params: tuple[str, ...]
    defaults: tuple[object, ...]
    body: tuple[ast.stmt, ...]

    def __repr__(self) -> str:  # keep state dumps readable
        return f"<script function {self.name}({', '.join(self.params)})>"


@dataclass(frozen=True)
class ModuleNamespace:
    """A read-only stand-in for an imported whitelisted module."""

    name: str
    members: MappingProxyType

    def __repr__(self) -> str:
        return f"<module {self.name}>"


@dataclass(frozen=True)
class ExecutionOutcome:
    ok: bool
    error: ScriptError | None
    output: str

    def render(self) -> str:
        if self.ok:
            return "==Result==\nCode executed successfully!"
        assert self.error is not None
        return f"==Result==\n{self.error.render()}"


def _guarded_range(*args):
    r = range(*args)
    if len(r) > RANGE_CAP:
        raise ValueError(f"range of {len(r)} exceeds the {RANGE_CAP} iteration cap")
    return r


class _ReturnSignal(Exception):
    def __init__(self, value):
        self.value = value


class _BreakSignal(Exception):
    pass


class _ContinueSignal(Exception):
    pass


class Interpreter:
    """Evaluates scripts against one model with one persistent state."""

    def __init__(self, model: Model, state: StateDictionary | None = None):
        self.model = model
        self.state = state if state is not None else StateDictionary()
        self.tools = ToolApi(model).bindings()
        self._output: list[str] = []
        self._depth = 0
        self._builtin_table: dict[str, object] = {
            name: getattr(_py_builtins, name) for name in BUILTIN_WHITELIST
        }
        self._builtin_table["range"] = _guarded_range
        self._builtin_table["print"] = self._print

    # -- public API ---------------------------------------------------------

    def execute(self, source: ScriptSource | str) -> ExecutionOutcome:
        if isinstance(source, str):
            source = strip_code_fence(source)
        self._output = []
        try:
            tree = parse(source)
            lines = source.text.splitlines()
            for stmt in tree.body:
                self._exec_stmt(stmt, self.state.bindings, lines)
        except ScriptFault as exc:
            return ExecutionOutcome(ok=False, error=exc.error, output="".join(self._output))
        return ExecutionOutcome(ok=True, error=None, output="".join(self._output))

    # -- helpers ------------------------------------------------------------

    def _fault(self, node: ast.AST, lines: list[str], kind: ErrorKind, message: str) -> ScriptFault:
        line = getattr(node, "lineno", 1)
        col = getattr(node, "col_offset", 0) + 1
        snippet = lines[line - 1].strip() if 1 <= line <= len(lines) else ""
        return fault(kind, message, line, col, snippet)

    def _print(self, *args, sep: str = " ", end: str = "\n"):
        self._output.append(sep.join(str(a) for a in args) + end)

    # -- statements ----------------------------------------------------------

    def _exec_block(self, body, scope: dict, lines: list[str]) -> None:
        for stmt in body:
            self._exec_stmt(stmt, scope, lines)

    def _exec_stmt(self, node: ast.stmt, scope: dict, lines: list[str]) -> None:
        if isinstance(node, ast.Assign):
            value = self._eval(node.value, scope, lines)
            for target in node.targets:
                self._assign(target, value, scope, lines)
        elif isinstance(node, ast.Expr):
            self._eval(node.value, scope, lines)
        elif isinstance(node, ast.If):
            if self._truth(self._eval(node.test, scope, lines), node, lines):
                self._exec_block(node.body, scope, lines)
            else:
                self._exec_block(node.orelse, scope, lines)
        elif isinstance(node, ast.For):
            iterable = self._eval(node.iter, scope, lines)
            items = self._iterate(iterable, node, lines)
            broke = False
            for item in items:
                self._assign(node.target, item, scope, lines)
                try:
                    self._exec_block(node.body, scope, lines)
                except _BreakSignal:
                    broke = True
                    break
                except _ContinueSignal:
                    continue
            if not broke:
                self._exec_block(node.orelse, scope, lines)
        elif isinstance(node, ast.FunctionDef):
            defaults = tuple(self._eval(d, scope, lines) for d in node.args.defaults)
            scope[node.name] = UserFunction(
                name=node.name,
                params=tuple(arg.arg for arg in node.args.args),
                defaults=defaults,
                body=tuple(node.body),
            )
        elif isinstance(node, ast.Return):
            value = self._eval(node.value, scope, lines) if node.value is not None else None
            raise _ReturnSignal(value)
        elif isinstance(node, ast.Break):
            raise _BreakSignal()
        elif isinstance(node, ast.Continue):
            raise _ContinueSignal()
        elif isinstance(node, ast.Pass):
            return
        elif isinstance(node, ast.Import):
            for alias in node.names:
                label = alias.asname or alias.name
                scope[label] = ModuleNamespace(alias.name, _MATH_NAMESPACE)
        elif isinstance(node, ast.ImportFrom):
            for alias in node.names:
                if alias.name not in _MATH_NAMESPACE:
                    raise self._fault(
                        node, lines, ErrorKind.WHITELIST_VIOLATION, f"math has no member {alias.name!r}"
                    )
                scope[alias.asname or alias.name] = _MATH_NAMESPACE[alias.name]
        else:  # pragma: no cover - parser already rejected everything else
            raise self._fault(node, lines, ErrorKind.SYNTAX_NOT_ALLOWED, type(node).__name__)

    def _assign(self, target: ast.expr, value, scope: dict, lines: list[str]) -> None:
        if isinstance(target, ast.Name):
            scope[target.id] = value
        elif isinstance(target, (ast.Tuple, ast.List)):
            try:
                items = list(value)
            except TypeError:
                raise self._fault(target, lines, ErrorKind.RUNTIME_ERROR, "cannot unpack a non-sequence") from None
            if len(items) != len(target.elts):
                raise self._fault(
                    target,
                    lines,
                    ErrorKind.RUNTIME_ERROR,
                    f"cannot unpack {len(items)} values into {len(target.elts)} targets",
                )
            for t, v in zip(target.elts, items):
                self._assign(t, v, scope, lines)
        elif isinstance(target, ast.Subscript):
            container = self._eval(target.value, scope, lines)
            key = self._eval(target.slice, scope, lines)
            try:
                container[key] = value
            except Exception as exc:
                raise self._fault(target, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
        else:
            raise self._fault(target, lines, ErrorKind.SYNTAX_NOT_ALLOWED, "unsupported assignment target")

    def _truth(self, value, node: ast.AST, lines: list[str]) -> bool:
        try:
            return bool(value)
        except Exception as exc:  # pragma: no cover - exotic values cannot arise
            raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None

    def _iterate(self, iterable, node: ast.AST, lines: list[str]) -> list:
        if isinstance(iterable, (list, tuple, str, range)) or hasattr(iterable, "__next__"):
            try:
                return list(iterable)
            except ScriptFault:
                raise
            except Exception as exc:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
        raise self._fault(
            node, lines, ErrorKind.RUNTIME_ERROR, f"cannot iterate over {type(iterable).__name__}"
        )

    # -- expressions -----------------------------------------------------------

    def _lookup(self, name: str, scope: dict, node: ast.AST, lines: list[str]):
        if name in scope:
            return scope[name]
        if scope is not self.state.bindings and name in self.state.bindings:
            return self.state.bindings[name]
        if name in self.tools:
            return self.tools[name]
        if name in self._builtin_table:
            return self._builtin_table[name]
        raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"name {name!r} is not defined")

    def _eval(self, node: ast.expr, scope: dict, lines: list[str]):
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            return self._lookup(node.id, scope, node, lines)
        if isinstance(node, ast.List):
            return [self._eval(e, scope, lines) for e in node.elts]
        if isinstance(node, ast.Tuple):
            return tuple(self._eval(e, scope, lines) for e in node.elts)
        if isinstance(node, ast.BinOp):
            return self._binop(node, scope, lines)
        if isinstance(node, ast.UnaryOp):
            operand = self._eval(node.operand, scope, lines)
            try:
                if isinstance(node.op, ast.USub):
                    return -operand
                if isinstance(node.op, ast.UAdd):
                    return +operand
                if isinstance(node.op, ast.Not):
                    return not operand
            except Exception as exc:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
        if isinstance(node, ast.BoolOp):
            result = None
            for value_node in node.values:
                result = self._eval(value_node, scope, lines)
                truth = self._truth(result, node, lines)
                if isinstance(node.op, ast.And) and not truth:
                    return result
                if isinstance(node.op, ast.Or) and truth:
                    return result
            return result
        if isinstance(node, ast.Compare):
            return self._compare(node, scope, lines)
        if isinstance(node, ast.Call):
            return self._call(node, scope, lines)
        if isinstance(node, ast.Subscript):
            container = self._eval(node.value, scope, lines)
            key = self._eval(node.slice, scope, lines)
            try:
                return container[key]
            except Exception as exc:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
        if isinstance(node, ast.Slice):
            lower = self._eval(node.lower, scope, lines) if node.lower else None
            upper = self._eval(node.upper, scope, lines) if node.upper else None
            step = self._eval(node.step, scope, lines) if node.step else None
            return slice(lower, upper, step)
        if isinstance(node, ast.JoinedStr):
            parts = []
            for piece in node.values:
                if isinstance(piece, ast.Constant):
                    parts.append(str(piece.value))
                elif isinstance(piece, ast.FormattedValue):
                    value = self._eval(piece.value, scope, lines)
                    spec = ""
                    if piece.format_spec is not None:
                        spec = self._eval(piece.format_spec, scope, lines)
                    if piece.conversion == 114:
                        value = repr(value)
                    elif piece.conversion == 115:
                        value = str(value)
                    try:
                        parts.append(format(value, spec))
                    except Exception as exc:
                        raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
            return "".join(parts)
        if isinstance(node, ast.ListComp):
            return self._list_comp(node, scope, lines)
        if isinstance(node, ast.Attribute):
            # Bare attribute loads outside call position resolve only on
            # whitelisted modules; everything else is sealed off.
            base = self._eval(node.value, scope, lines)
            if isinstance(base, ModuleNamespace):
                if node.attr in base.members:
                    return base.members[node.attr]
                raise self._fault(
                    node, lines, ErrorKind.WHITELIST_VIOLATION, f"{base.name}.{node.attr} is not available"
                )
            raise self._fault(
                node,
                lines,
                ErrorKind.WHITELIST_VIOLATION,
                f"attribute access on {type(base).__name__} values is not allowed",
            )
        raise self._fault(node, lines, ErrorKind.SYNTAX_NOT_ALLOWED, type(node).__name__)

    def _binop(self, node: ast.BinOp, scope: dict, lines: list[str]):
        left = self._eval(node.left, scope, lines)
        right = self._eval(node.right, scope, lines)
        op = node.op
        try:
            if isinstance(op, ast.Mult) and (
                isinstance(left, (list, tuple, str)) or isinstance(right, (list, tuple, str))
            ):
                count = right if isinstance(right, int) else left if isinstance(left, int) else None
                seq = left if isinstance(left, (list, tuple, str)) else right
                if isinstance(count, int) and count * max(len(seq), 1) > SEQUENCE_REPEAT_CAP:
                    raise self._fault(
                        node, lines, ErrorKind.RUNTIME_ERROR, f"sequence repetition exceeds the {SEQUENCE_REPEAT_CAP} cap"
                    )
            if isinstance(op, ast.Pow):
                if isinstance(left, int) and isinstance(right, int) and abs(right) > POW_EXPONENT_CAP and abs(left) > 1:
                    raise self._fault(
                        node, lines, ErrorKind.RUNTIME_ERROR, f"integer exponent exceeds the {POW_EXPONENT_CAP} cap"
                    )
            if isinstance(op, ast.Add):
                return left + right
            if isinstance(op, ast.Sub):
                return left - right
            if isinstance(op, ast.Mult):
                return left * right
            if isinstance(op, ast.Div):
                return left / right
            if isinstance(op, ast.FloorDiv):
                return left // right
            if isinstance(op, ast.Mod):
                return left % right
            if isinstance(op, ast.Pow):
                return left**right
        except ScriptFault:
            raise
        except Exception as exc:
            raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
        raise self._fault(node, lines, ErrorKind.SYNTAX_NOT_ALLOWED, type(op).__name__)

    def _compare(self, node: ast.Compare, scope: dict, lines: list[str]) -> bool:
        left = self._eval(node.left, scope, lines)
        for op, comparator in zip(node.ops, node.comparators):
            right = self._eval(comparator, scope, lines)
            try:
                if isinstance(op, ast.Eq):
                    ok = left == right
                elif isinstance(op, ast.NotEq):
                    ok = left != right
                elif isinstance(op, ast.Lt):
                    ok = left < right
                elif isinstance(op, ast.LtE):
                    ok = left <= right
                elif isinstance(op, ast.Gt):
                    ok = left > right
                elif isinstance(op, ast.GtE):
                    ok = left >= right
                elif isinstance(op, ast.In):
                    ok = left in right
                elif isinstance(op, ast.NotIn):
                    ok = left not in right
                elif isinstance(op, ast.Is):
                    ok = left is right
                elif isinstance(op, ast.IsNot):
                    ok = left is not right
                else:  # pragma: no cover
                    raise self._fault(node, lines, ErrorKind.SYNTAX_NOT_ALLOWED, type(op).__name__)
            except ScriptFault:
                raise
            except Exception as exc:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, str(exc)) from None
            if not ok:
                return False
            left = right
        return True

    def _list_comp(self, node: ast.ListComp, scope: dict, lines: list[str]) -> list:
        result: list = []
        local = dict(scope)

        def run(generators: list[ast.comprehension]) -> None:
            if not generators:
                result.append(self._eval(node.elt, local, lines))
                return
            gen = generators[0]
            for item in self._iterate(self._eval(gen.iter, local, lines), node, lines):
                self._assign(gen.target, item, local, lines)
                if all(self._truth(self._eval(cond, local, lines), node, lines) for cond in gen.ifs):
                    run(generators[1:])

        run(list(node.generators))
        return result

    # -- calls -------------------------------------------------------------------

    def _call(self, node: ast.Call, scope: dict, lines: list[str]):
        args = [self._eval(a, scope, lines) for a in node.args]
        kwargs = {kw.arg: self._eval(kw.value, scope, lines) for kw in node.keywords}

        func = node.func
        if isinstance(func, ast.Name):
            target = self._resolve_callable(func.id, scope, node, lines)
            return self._invoke(target, func.id, args, kwargs, node, lines)
        if isinstance(func, ast.Attribute):
            if isinstance(func.value, ast.Name):
                name = func.value.id
                bound = (
                    name in scope
                    or name in self.state.bindings
                    or name in self.tools
                    or name in self._builtin_table
                )
                if not bound:
                    raise self._fault(
                        node,
                        lines,
                        ErrorKind.WHITELIST_VIOLATION,
                        f"{name!r} is not a whitelisted module or defined value",
                    )
            base = self._eval(func.value, scope, lines)
            if isinstance(base, ModuleNamespace):
                member = base.members.get(func.attr)
                if member is None or not callable(member):
                    raise self._fault(
                        node, lines, ErrorKind.WHITELIST_VIOLATION, f"{base.name}.{func.attr} is not callable here"
                    )
                return self._invoke(member, f"{base.name}.{func.attr}", args, kwargs, node, lines)
            allowed = METHOD_WHITELIST.get(type(base))
            if allowed and func.attr in allowed:
                method = getattr(base, func.attr)
                return self._invoke(method, f"{type(base).__name__}.{func.attr}", args, kwargs, node, lines)
            raise self._fault(
                node,
                lines,
                ErrorKind.WHITELIST_VIOLATION,
                f"{type(base).__name__}.{func.attr} is not a whitelisted method",
            )
        raise self._fault(node, lines, ErrorKind.SYNTAX_NOT_ALLOWED, "calls must target a name or method")

    def _resolve_callable(self, name: str, scope: dict, node: ast.AST, lines: list[str]):
        if name in scope:
            return scope[name]
        if scope is not self.state.bindings and name in self.state.bindings:
            return self.state.bindings[name]
        if name in self.tools:
            return self.tools[name]
        if name in self._builtin_table:
            return self._builtin_table[name]
        raise self._fault(node, lines, ErrorKind.WHITELIST_VIOLATION, f"{name!r} is not a callable tool, function or builtin")

    def _adapt(self, value, node: ast.AST, lines: list[str]):
        if isinstance(value, UserFunction):
            return lambda *a, **k: self._call_user_function(value, list(a), k, node, lines)
        return value

    def _invoke(self, target, label: str, args: list, kwargs: dict, node: ast.AST, lines: list[str]):
        if isinstance(target, UserFunction):
            return self._call_user_function(target, args, kwargs, node, lines)
        if callable(target):
            is_tool = label in self.tools or any(target is t for t in self.tools.values())
            args = [self._adapt(a, node, lines) for a in args]
            kwargs = {k: self._adapt(v, node, lines) for k, v in kwargs.items()}
            try:
                return target(*args, **kwargs)
            except ScriptFault:
                raise
            except KernelError as exc:
                raise self._fault(node, lines, ErrorKind.TOOL_ERROR, f"{label}: {exc}") from None
            except Exception as exc:
                kind = ErrorKind.TOOL_ERROR if is_tool else ErrorKind.RUNTIME_ERROR
                raise self._fault(node, lines, kind, f"{label}: {exc}") from None
        raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"{label!r} is not callable")

    def _call_user_function(self, func: UserFunction, args: list, kwargs: dict, node: ast.AST, lines: list[str]):
        if self._depth >= RECURSION_CAP:
            raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"recursion deeper than {RECURSION_CAP} frames")
        frame: dict[str, object] = {}
        params = list(func.params)
        required = len(params) - len(func.defaults)
        for i, value in enumerate(args):
            if i >= len(params):
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"{func.name}() takes {len(params)} arguments")
            frame[params[i]] = value
        for key, value in kwargs.items():
            if key not in params:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"{func.name}() has no parameter {key!r}")
            if key in frame:
                raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"duplicate argument {key!r}")
            frame[key] = value
        for i, param in enumerate(params):
            if param not in frame:
                if i >= required:
                    frame[param] = func.defaults[i - required]
                else:
                    raise self._fault(node, lines, ErrorKind.RUNTIME_ERROR, f"{func.name}() missing argument {param!r}")
        self._depth += 1
        try:
            self._exec_block(func.body, frame, lines)
        except _ReturnSignal as signal:
            return signal.value
        finally:
            self._depth -= 1
        return None
