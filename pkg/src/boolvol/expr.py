"""Textual grammar for Boolean set expressions.

Grammar (whitespace ignored, case sensitive):

    expr  := union
    union := diff ('|' diff)*
    diff  := inter ('\\' inter)*
    inter := unary ('&' unary)*
    unary := '~' unary | atom
    atom  := VAR | 'X' | 'E' | '(' expr ')'
    VAR   := 'x' [1-9][0-9]*

'|' is set union, '&' intersection, '\\' difference, '~' complement,
'X' the universe and 'E' the empty set.  Binary operators are
left-associative; precedence from loosest to tightest: '|' < '\\' < '&' < '~'.

This grammar is the wire format for expressions in CLI arguments and config
files.  ``format_expr`` renders the minimal-parenthesis form, and
``parse(format_expr(e))`` reproduces ``e`` node for node.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Universe:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Union:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Inter:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Diff:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Compl:
    child: "BoolExpr"


BoolExpr = Var | Universe | Empty | Union | Inter | Diff | Compl


class ParseError(ValidationError):
    """Syntax error, carrying the byte offset and an expected-token hint."""

    def __init__(self, offset: int, message: str, expected: str | None = None):
        self.offset = offset
        self.message = message
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"parse error at offset {offset}: {message}{hint}")


def _tokenize(text: str) -> list[tuple[str, int | None, int]]:
    tokens: list[tuple[str, int | None, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "|&\\~()XE":
            tokens.append((c, None, i))
            i += 1
            continue
        if c == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            digits = text[i + 1 : j]
            if not digits or digits[0] == "0":
                raise ParseError(i, f"invalid variable {text[i:j]!r}",
                                 "'x' followed by an index starting 1-9")
            tokens.append(("var", int(digits), i))
            i = j
            continue
        raise ParseError(i, f"unexpected character {c!r}",
                         "a variable, 'X', 'E', '~', '(' or an operator")
    tokens.append(("end", None, n))
    return tokens


def parse(text: str) -> BoolExpr:
    """Parse ``text`` into an AST, raising ParseError with a byte offset."""
    tokens = _tokenize(text)
    node, i = _parse_union(tokens, 0)
    kind, _, off = tokens[i]
    if kind != "end":
        raise ParseError(off, "trailing input", "end of input")
    return node


def _parse_union(toks, i):
    node, i = _parse_diff(toks, i)
    while toks[i][0] == "|":
        rhs, i = _parse_diff(toks, i + 1)
        node = Union(node, rhs)
    return node, i


def _parse_diff(toks, i):
    node, i = _parse_inter(toks, i)
    while toks[i][0] == "\\":
        rhs, i = _parse_inter(toks, i + 1)
        node = Diff(node, rhs)
    return node, i


def _parse_inter(toks, i):
    node, i = _parse_unary(toks, i)
    while toks[i][0] == "&":
        rhs, i = _parse_unary(toks, i + 1)
        node = Inter(node, rhs)
    return node, i


def _parse_unary(toks, i):
    if toks[i][0] == "~":
        child, i = _parse_unary(toks, i + 1)
        return Compl(child), i
    return _parse_atom(toks, i)


def _parse_atom(toks, i):
    kind, value, off = toks[i]
    if kind == "var":
        return Var(value), i + 1
    if kind == "X":
        return Universe(), i + 1
    if kind == "E":
        return Empty(), i + 1
    if kind == "(":
        node, i = _parse_union(toks, i + 1)
        kind2, _, off2 = toks[i]
        if kind2 != ")":
            raise ParseError(off2, "unbalanced parenthesis", "')'")
        return node, i + 1
    raise ParseError(off, f"unexpected token {kind!r}",
                     "a variable, 'X', 'E', '~' or '('")


# Precedence levels used for minimal-parenthesis rendering.
_LEVEL_UNION, _LEVEL_DIFF, _LEVEL_INTER, _LEVEL_COMPL, _LEVEL_ATOM = 1, 2, 3, 4, 5


def format_expr(e: BoolExpr) -> str:
    """Render ``e`` with the fewest parentheses that still round-trip."""
    return _fmt(e, 0)


def _fmt(e: BoolExpr, min_level: int) -> str:
    if isinstance(e, Var):
        s, level = f"x{e.index}", _LEVEL_ATOM
    elif isinstance(e, Universe):
        s, level = "X", _LEVEL_ATOM
    elif isinstance(e, Empty):
        s, level = "E", _LEVEL_ATOM
    elif isinstance(e, Union):
        s = f"{_fmt(e.left, _LEVEL_UNION)} | {_fmt(e.right, _LEVEL_UNION + 1)}"
        level = _LEVEL_UNION
    elif isinstance(e, Diff):
        s = f"{_fmt(e.left, _LEVEL_DIFF)} \\ {_fmt(e.right, _LEVEL_DIFF + 1)}"
        level = _LEVEL_DIFF
    elif isinstance(e, Inter):
        s = f"{_fmt(e.left, _LEVEL_INTER)} & {_fmt(e.right, _LEVEL_INTER + 1)}"
        level = _LEVEL_INTER
    elif isinstance(e, Compl):
        s, level = f"~{_fmt(e.child, _LEVEL_COMPL)}", _LEVEL_COMPL
    else:
        raise ValidationError(f"not an expression node: {e!r}")
    if level < min_level:
        return f"({s})"
    return s


def max_var_index(e: BoolExpr) -> int:
    """Largest variable index occurring in ``e`` (0 if none)."""
    if isinstance(e, Var):
        return e.index
    if isinstance(e, (Universe, Empty)):
        return 0
    if isinstance(e, Compl):
        return max_var_index(e.child)
    return max(max_var_index(e.left), max_var_index(e.right))
