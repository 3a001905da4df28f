"""Parsing and grammar enforcement for modeling scripts.

Scripts are a restricted imperative subset of Python, parsed with the stdlib
``ast`` module and then validated node by node. Anything outside the accepted
grammar is rejected up front with a located SyntaxNotAllowed error so the
repair loop gets a precise construct name, not a generic crash.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

from .errors import ErrorKind, ScriptFault, fault

# Modules the grammar lets scripts import. Kept tiny and side-effect free so
# executions stay deterministic and sandboxed.
IMPORTABLE_MODULES = ("math",)

_FENCE_RE = re.compile(r"```[ \t]*([A-Za-z0-9_+-]*)[ \t]*\r?\n(.*?)```", re.DOTALL)


@dataclass(frozen=True)
class ScriptSource:
    """Script text after code-fence stripping, plus any fence diagnostics."""

    text: str
    warnings: tuple[str, ...] = field(default=())


def strip_code_fence(raw: str) -> ScriptSource:
    """Extract the first fenced code block; pass plain text through unchanged."""
    matches = _FENCE_RE.findall(raw)
    if not matches:
        return ScriptSource(text=raw)
    warnings: tuple[str, ...] = ()
    if len(matches) > 1:
        warnings = (f"reply contained {len(matches)} fenced blocks; using the first",)
    return ScriptSource(text=matches[0][1], warnings=warnings)


_ALLOWED_EXPRESSIONS = (
    ast.BinOp,
    ast.UnaryOp,
    ast.BoolOp,
    ast.Compare,
    ast.Call,
    ast.Name,
    ast.Constant,
    ast.List,
    ast.Tuple,
    ast.Subscript,
    ast.Slice,
    ast.JoinedStr,
    ast.FormattedValue,
    ast.ListComp,
    ast.comprehension,
    ast.Load,
    ast.Store,
    ast.keyword,
)

_ALLOWED_OPERATORS = (
    ast.Add,
    ast.Sub,
    ast.Mult,
    ast.Div,
    ast.FloorDiv,
    ast.Mod,
    ast.Pow,
    ast.USub,
    ast.UAdd,
    ast.Not,
    ast.And,
    ast.Or,
    ast.Eq,
    ast.NotEq,
    ast.Lt,
    ast.LtE,
    ast.Gt,
    ast.GtE,
    ast.In,
    ast.NotIn,
    ast.Is,
    ast.IsNot,
)

_ALLOWED_STATEMENTS = (
    ast.Assign,
    ast.Expr,
    ast.For,
    ast.If,
    ast.FunctionDef,
    ast.Return,
    ast.Pass,
    ast.Break,
    ast.Continue,
    ast.Import,
    ast.ImportFrom,
)

_FORBIDDEN_NAMES = {
    ast.While: "the 'while' statement",
    ast.ClassDef: "the class definition",
    ast.With: "the 'with' statement",
    ast.AsyncWith: "the 'with' statement",
    ast.Try: "the 'try' statement",
    ast.Raise: "the 'raise' statement",
    ast.Assert: "the 'assert' statement",
    ast.Delete: "the 'del' statement",
    ast.Global: "the 'global' statement",
    ast.Nonlocal: "the 'nonlocal' statement",
    ast.Lambda: "the lambda expression",
    ast.IfExp: "the conditional expression",
    ast.Dict: "the dict display",
    ast.Set: "the set display",
    ast.DictComp: "the dict comprehension",
    ast.SetComp: "the set comprehension",
    ast.GeneratorExp: "the generator expression",
    ast.Await: "the 'await' expression",
    ast.Yield: "the 'yield' expression",
    ast.YieldFrom: "the 'yield from' expression",
    ast.AsyncFunctionDef: "the async function definition",
    ast.AsyncFor: "the async for loop",
    ast.Starred: "the starred expression",
    ast.AugAssign: "the augmented assignment",
    ast.AnnAssign: "the annotated assignment",
    ast.NamedExpr: "the assignment expression",
    ast.Match: "the match statement",
}


def _snippet(source_lines: list[str], line: int) -> str:
    if 1 <= line <= len(source_lines):
        return source_lines[line - 1].strip()
    return ""


class _GrammarCheck(ast.NodeVisitor):
    def __init__(self, source_lines: list[str]):
        self.lines = source_lines

    def _reject(self, node: ast.AST, construct: str) -> None:
        line = getattr(node, "lineno", 1)
        col = getattr(node, "col_offset", 0) + 1
        raise fault(
            ErrorKind.SYNTAX_NOT_ALLOWED,
            f"{construct} is not allowed in modeling scripts",
            line,
            col,
            _snippet(self.lines, line),
        )

    def visit_Import(self, node: ast.Import) -> None:
        for alias in node.names:
            if alias.name not in IMPORTABLE_MODULES:
                self._reject(node, f"import of {alias.name!r}")
        self.generic_visit(node)

    def visit_ImportFrom(self, node: ast.ImportFrom) -> None:
        if node.module not in IMPORTABLE_MODULES:
            self._reject(node, f"import of {node.module!r}")
        self.generic_visit(node)

    def visit_Attribute(self, node: ast.Attribute) -> None:
        # Attribute access is only meaningful on whitelisted values and only
        # resolvable at run time; grammatically it must load, never store.
        if not isinstance(node.ctx, ast.Load):
            self._reject(node, "attribute assignment")
        self.generic_visit(node)

    def visit_FunctionDef(self, node: ast.FunctionDef) -> None:
        args = node.args
        if args.vararg or args.kwarg or args.posonlyargs or args.kwonlyargs:
            self._reject(node, "starred or keyword-only parameters")
        if node.decorator_list:
            self._reject(node.decorator_list[0], "the decorator")
        self.generic_visit(node)

    def visit_Call(self, node: ast.Call) -> None:
        for kw in node.keywords:
            if kw.arg is None:
                self._reject(node, "double-star argument unpacking")
        self.generic_visit(node)

    def generic_visit(self, node: ast.AST) -> None:
        for kind, label in _FORBIDDEN_NAMES.items():
            if isinstance(node, kind):
                self._reject(node, label)
        if isinstance(node, ast.stmt) and not isinstance(node, _ALLOWED_STATEMENTS):
            self._reject(node, f"the {type(node).__name__!r} statement")
        if isinstance(node, ast.expr) and not isinstance(
            node, _ALLOWED_EXPRESSIONS + (ast.Attribute,)
        ):
            self._reject(node, f"the {type(node).__name__!r} expression")
        if isinstance(node, (ast.operator, ast.unaryop, ast.boolop, ast.cmpop)) and not isinstance(
            node, _ALLOWED_OPERATORS
        ):
            self._reject(node, f"the {type(node).__name__!r} operator")
        super().generic_visit(node)


def parse(source: ScriptSource | str) -> ast.Module:
    """Parse and grammar-check a script, raising ScriptFault on rejection."""
    text = source.text if isinstance(source, ScriptSource) else source
    lines = text.splitlines()
    try:
        tree = ast.parse(text, mode="exec")
    except SyntaxError as exc:
        line = exc.lineno or 1
        col = exc.offset or 1
        raise fault(
            ErrorKind.SYNTAX_ERROR,
            exc.msg or "invalid syntax",
            line,
            col,
            _snippet(lines, line),
        ) from None
    checker = _GrammarCheck(lines)
    for stmt in tree.body:
        checker.visit(stmt)
    return tree


def parse_result(source: ScriptSource | str):
    """parse() variant returning (tree, None) or (None, ScriptError)."""
    try:
        return parse(source), None
    except ScriptFault as exc:
        return None, exc.error
