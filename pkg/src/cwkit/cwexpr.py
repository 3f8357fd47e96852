"""Label-expression terms: parse, validate, evaluate, and count labels.

A term builds a labelled graph from four operations: create a labelled vertex
("3(a)"), disjoint union ("e1 + e2"), join every label-i vertex to every
label-j vertex ("eta(i,j; e)", i != j), and rename a label ("rho(i->j; e)").
The number of distinct labels appearing anywhere in a term is its width; the
least width over all terms building a graph is that graph's clique-width.

Expression files are UTF-8 text in this grammar, one expression per file;
'#' begins a comment line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import InputError, ParseError
from .graphs import Graph

__all__ = [
    "Create",
    "Union",
    "Join",
    "Rename",
    "CwExpr",
    "LabelledGraph",
    "parse_cwexpr",
    "parse_cwexpr_file",
    "eval_cwexpr",
    "width",
    "format_cwexpr",
]


@dataclass(frozen=True)
class Create:
    label: int
    vertex: str

    def __post_init__(self):
        if self.label < 1:
            raise InputError(f"label {self.label} must be a positive integer")
        if not self.vertex:
            raise InputError("vertex names must be non-empty")


@dataclass(frozen=True)
class Union:
    left: "CwExpr"
    right: "CwExpr"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    sub: "CwExpr"

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise InputError("labels must be positive integers")
        if self.i == self.j:
            raise InputError(f"eta({self.i},{self.j}): join labels must differ")


@dataclass(frozen=True)
class Rename:
    i: int
    j: int
    sub: "CwExpr"

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise InputError("labels must be positive integers")


CwExpr = Create | Union | Join | Rename


@dataclass(frozen=True)
class LabelledGraph:
    """A graph together with one positive label per vertex."""

    graph: Graph
    label_of: tuple[int, ...]


def _vertex_names(expr: CwExpr, acc: list[str]) -> None:
    match expr:
        case Create(_, name):
            acc.append(name)
        case Union(left, right):
            _vertex_names(left, acc)
            _vertex_names(right, acc)
        case Join(_, _, sub) | Rename(_, _, sub):
            _vertex_names(sub, acc)


def validate(expr: CwExpr) -> None:
    """Reject duplicate vertex names (union operands must be disjoint)."""
    names: list[str] = []
    _vertex_names(expr, names)
    seen = set()
    for name in names:
        if name in seen:
            raise InputError(f"vertex name {name!r} appears more than once")
        seen.add(name)


def eval_cwexpr(expr: CwExpr) -> LabelledGraph:
    """Evaluate to a labelled graph; vertices are numbered in creation order."""
    validate(expr)

    def rec(e: CwExpr) -> tuple[list[str], list[int], set[tuple[int, int]]]:
        match e:
            case Create(label, name):
                return [name], [label], set()
            case Union(left, right):
                n1, l1, e1 = rec(left)
                n2, l2, e2 = rec(right)
                off = len(n1)
                return n1 + n2, l1 + l2, e1 | {(u + off, v + off) for u, v in e2}
            case Join(i, j, sub):
                names, labels, edges = rec(sub)
                left = [v for v, lab in enumerate(labels) if lab == i]
                right = [v for v, lab in enumerate(labels) if lab == j]
                for u in left:
                    for v in right:
                        edges.add((min(u, v), max(u, v)))
                return names, labels, edges
            case Rename(i, j, sub):
                names, labels, edges = rec(sub)
                return names, [j if lab == i else lab for lab in labels], edges
        raise InputError(f"unknown expression node {e!r}")

    names, labels, edges = rec(expr)
    g = Graph(len(names), edges, dict(enumerate(names)))
    return LabelledGraph(g, tuple(labels))


def width(expr: CwExpr) -> int:
    """Number of distinct labels occurring anywhere in the expression."""
    labels: set[int] = set()

    def rec(e: CwExpr) -> None:
        match e:
            case Create(label, _):
                labels.add(label)
            case Union(left, right):
                rec(left)
                rec(right)
            case Join(i, j, sub) | Rename(i, j, sub):
                labels.add(i)
                labels.add(j)
                rec(sub)

    rec(expr)
    return len(labels)


# -- concrete syntax -------------------------------------------------------

_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_KEYWORDS = ("eta", "rho")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
                continue
            if text.startswith("->", pos):
                self.items.append(("sym", "->", pos))
                pos += 2
            elif ch.isdigit():
                m = _INT.match(text, pos)
                self.items.append(("int", m.group(), pos))
                pos = m.end()
            elif ch.isalpha() or ch == "_":
                m = _NAME.match(text, pos)
                kind = "kw" if m.group() in _KEYWORDS else "name"
                self.items.append((kind, m.group(), pos))
                pos = m.end()
            elif ch in "+(),;":
                self.items.append(("sym", ch, pos))
                pos += 1
            else:
                raise ParseError("unexpected character", text, pos)
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.text, len(self.text))
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind}", self.text, tok[2])
        return tok


def _parse_prim(toks: _Tokens) -> CwExpr:
    tok = toks.next()
    kind, value, pos = tok
    try:
        if kind == "int":
            toks.expect("sym", "(")
            name = toks.next()
            if name[0] not in ("name", "int"):
                raise ParseError("expected a vertex name", toks.text, name[2])
            toks.expect("sym", ")")
            return Create(int(value), name[1])
        if kind == "kw" and value == "eta":
            toks.expect("sym", "(")
            i = int(toks.expect("int")[1])
            toks.expect("sym", ",")
            j = int(toks.expect("int")[1])
            toks.expect("sym", ";")
            sub = _parse_expr(toks)
            toks.expect("sym", ")")
            return Join(i, j, sub)
        if kind == "kw" and value == "rho":
            toks.expect("sym", "(")
            i = int(toks.expect("int")[1])
            toks.expect("sym", "->")
            j = int(toks.expect("int")[1])
            toks.expect("sym", ";")
            sub = _parse_expr(toks)
            toks.expect("sym", ")")
            return Rename(i, j, sub)
        if kind == "sym" and value == "(":
            sub = _parse_expr(toks)
            toks.expect("sym", ")")
            return sub
    except InputError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), toks.text, pos) from None
    raise ParseError("expected an expression", toks.text, pos)


def _parse_expr(toks: _Tokens) -> CwExpr:
    expr = _parse_prim(toks)
    while toks.peek() is not None and toks.peek()[1] == "+":
        toks.next()
        expr = Union(expr, _parse_prim(toks))
    return expr


def parse_cwexpr(text: str) -> CwExpr:
    toks = _Tokens(text)
    expr = _parse_expr(toks)
    extra = toks.peek()
    if extra is not None:
        raise ParseError("trailing input after expression", text, extra[2])
    validate(expr)
    return expr


def parse_cwexpr_file(text: str) -> CwExpr:
    """Parse a one-expression file; '#' lines are comments."""
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    return parse_cwexpr(" ".join(lines))


def format_cwexpr(expr: CwExpr) -> str:
    match expr:
        case Create(label, name):
            return f"{label}({name})"
        case Union(left, right):
            rhs = format_cwexpr(right)
            if isinstance(right, Union):
                rhs = f"({rhs})"
            return f"{format_cwexpr(left)} + {rhs}"
        case Join(i, j, sub):
            return f"eta({i},{j}; {format_cwexpr(sub)})"
        case Rename(i, j, sub):
            return f"rho({i}->{j}; {format_cwexpr(sub)})"
    raise InputError(f"cannot format {expr!r}")
