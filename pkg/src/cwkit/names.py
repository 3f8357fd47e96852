"""A small name language for graphs: "P5", "2P1+P3", "co(S_1_2_3)", "wall(3)".

ASCII-only concrete syntax: ``co(...)`` complements, underscores mark
subscripts, an integer prefix repeats a summand.  Grammar::

    expr := term ('+' term)*
    term := [int] atom
    atom := 'P'n | 'C'n | 'K'n | 'K1_'r | 'S_'i'_'j'_'k
          | 'co(' expr ')' | 'wall(' h ')' | 'swall(' h ',' k ')' | 'grid(' n ')'
          | 'paw' | 'diamond' | 'claw' | 'bull' | 'hammer' | 'gem'

Whitespace is ignored.  The grammar is the stable public surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InputError, ParseError
from .graphs import Graph, complement, disjoint_union, induced_subgraph

__all__ = [
    "Path",
    "Cycle",
    "Complete",
    "Star",
    "SubdividedClaw",
    "Named",
    "Sum",
    "Complement",
    "Wall",
    "SubdividedWall",
    "Grid",
    "NameExpr",
    "parse_name",
    "realize",
    "recognize",
    "format_name",
    "graph_named",
]


@dataclass(frozen=True)
class Path:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"P{self.r}: paths need at least one vertex")


@dataclass(frozen=True)
class Cycle:
    r: int

    def __post_init__(self):
        if self.r < 3:
            raise InputError(f"C{self.r}: cycles need at least three vertices")


@dataclass(frozen=True)
class Complete:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"K{self.r}: complete graphs need at least one vertex")


@dataclass(frozen=True)
class Star:
    r: int  # K_{1,r}

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"K1_{self.r}: stars need at least one leaf")


@dataclass(frozen=True)
class SubdividedClaw:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if not (1 <= self.i <= self.j <= self.k):
            raise InputError(
                f"S_{self.i}_{self.j}_{self.k}: leg lengths must satisfy 1 <= i <= j <= k"
            )


NAMED_IDS = ("paw", "diamond", "claw", "bull", "hammer", "gem")


@dataclass(frozen=True)
class Named:
    id: str

    def __post_init__(self):
        if self.id not in NAMED_IDS:
            raise InputError(f"unknown named graph {self.id!r}")


@dataclass(frozen=True)
class Complement:
    inner: "NameExpr"


@dataclass(frozen=True)
class Sum:
    parts: tuple[tuple[int, "NameExpr"], ...]

    def __post_init__(self):
        if not self.parts:
            raise InputError("empty sum")
        for mult, _ in self.parts:
            if mult < 1:
                raise InputError(f"summand multiplier {mult} must be at least 1")


@dataclass(frozen=True)
class Wall:
    h: int

    def __post_init__(self):
        if self.h < 2:
            raise InputError(f"wall({self.h}): height must be at least 2")


@dataclass(frozen=True)
class SubdividedWall:
    h: int
    k: int

    def __post_init__(self):
        if self.h < 2 or self.k < 0:
            raise InputError(f"swall({self.h},{self.k}): need height >= 2 and k >= 0")


@dataclass(frozen=True)
class Grid:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InputError(f"grid({self.n}): side must be at least 3")


NameExpr = Union[
    Path, Cycle, Complete, Star, SubdividedClaw, Named, Complement, Sum, Wall, SubdividedWall, Grid
]


# -- parser --------------------------------------------------------------

_INT = re.compile(r"\d+")
_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


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
            if ch.isdigit():
                m = _INT.match(text, pos)
                self.items.append(("int", m.group(), pos))
                pos = m.end()
            elif ch.isalpha():
                m = _WORD.match(text, pos)
                self.items.append(("word", m.group(), pos))
                pos = m.end()
            elif ch in "+(),":
                self.items.append(("sym", ch, pos))
                pos += 1
            else:
                raise ParseError("unexpected character", text, pos)
        self.i = 0

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.items[self.i] if self.i < len(self.items) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        self.i += 1
        return tok

    def expect(self, kind: str, value: Optional[str] = None) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind}", self.text, tok[2])
        return tok


_WORD_ATOM = re.compile(r"^(?:P(\d+)|C(\d+)|K1_(\d+)|K(\d+)|S_(\d+)_(\d+)_(\d+))$")


def _parse_atom(toks: _Tokens) -> NameExpr:
    kind, value, pos = toks.next()
    if kind != "word":
        raise ParseError("expected a graph name", toks.text, pos)
    if value == "co":
        toks.expect("sym", "(")
        inner = _parse_expr(toks)
        toks.expect("sym", ")")
        return Complement(inner)
    if value in ("wall", "swall", "grid"):
        toks.expect("sym", "(")
        args = [int(toks.expect("int")[1])]
        while toks.peek() and toks.peek()[1] == ",":
            toks.next()
            args.append(int(toks.expect("int")[1]))
        toks.expect("sym", ")")
        try:
            if value == "wall" and len(args) == 1:
                return Wall(args[0])
            if value == "swall" and len(args) == 2:
                return SubdividedWall(args[0], args[1])
            if value == "grid" and len(args) == 1:
                return Grid(args[0])
        except InputError as exc:
            raise ParseError(str(exc), toks.text, pos) from None
        raise ParseError(f"wrong number of arguments for {value}", toks.text, pos)
    m = _WORD_ATOM.match(value)
    try:
        if m:
            if m.group(1):
                return Path(int(m.group(1)))
            if m.group(2):
                return Cycle(int(m.group(2)))
            if m.group(3):
                return Star(int(m.group(3)))
            if m.group(4):
                return Complete(int(m.group(4)))
            return SubdividedClaw(int(m.group(5)), int(m.group(6)), int(m.group(7)))
        if value in NAMED_IDS:
            return Named(value)
    except InputError as exc:
        raise ParseError(str(exc), toks.text, pos) from None
    raise ParseError(f"unknown graph name {value!r}", toks.text, pos)


def _parse_term(toks: _Tokens) -> tuple[int, NameExpr]:
    mult = 1
    tok = toks.peek()
    if tok is not None and tok[0] == "int":
        toks.next()
        mult = int(tok[1])
        if mult < 1:
            raise ParseError("multiplier must be at least 1", toks.text, tok[2])
    return mult, _parse_atom(toks)


def _parse_expr(toks: _Tokens) -> NameExpr:
    parts = [_parse_term(toks)]
    while toks.peek() is not None and toks.peek()[1] == "+":
        toks.next()
        parts.append(_parse_term(toks))
    if len(parts) == 1 and parts[0][0] == 1:
        return parts[0][1]
    return Sum(tuple(parts))


def parse_name(text: str) -> NameExpr:
    toks = _Tokens(text)
    expr = _parse_expr(toks)
    extra = toks.peek()
    if extra is not None:
        raise ParseError("trailing input after graph name", text, extra[2])
    return expr


# -- realisation ---------------------------------------------------------


def _path_graph(r: int) -> Graph:
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def realize(expr: NameExpr) -> Graph:
    """The graph a name denotes, with deterministic vertex numbering."""
    match expr:
        case Path(r):
            return _path_graph(r)
        case Cycle(r):
            return Graph(r, [(i, (i + 1) % r) for i in range(r)])
        case Complete(r):
            return Graph(r, [(i, j) for i in range(r) for j in range(i + 1, r)])
        case Star(r):
            return Graph(r + 1, [(0, i) for i in range(1, r + 1)])
        case SubdividedClaw(i, j, k):
            edges = []
            v = 1
            for leg in (i, j, k):
                prev = 0
                for _ in range(leg):
                    edges.append((prev, v))
                    prev = v
                    v += 1
            return Graph(v, edges)
        case Named("paw"):
            return complement(realize(parse_name("P1+P3")))
        case Named("diamond"):
            return complement(realize(parse_name("2P1+P2")))
        case Named("gem"):
            return complement(realize(parse_name("P1+P4")))
        case Named("claw"):
            return realize(Star(3))
        case Named("bull"):
            return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4)])
        case Named("hammer"):
            return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)])
        case Complement(inner):
            return complement(realize(inner))
        case Sum(parts):
            out = Graph(0)
            for mult, sub in parts:
                piece = realize(sub)
                for _ in range(mult):
                    out = disjoint_union(out, piece)
            return out
        case Wall(h):
            from .witnesses import wall

            return wall(h)
        case SubdividedWall(h, k):
            from .witnesses import subdivided_wall

            return subdivided_wall(h, k)
        case Grid(n):
            from .witnesses import grid

            return grid(n)[0]
    raise InputError(f"cannot realize {expr!r}")


def graph_named(text: str) -> Graph:
    """Parse-and-realize convenience."""
    return realize(parse_name(text))


# -- pretty-printing and recognition --------------------------------------


def format_name(expr: NameExpr) -> str:
    match expr:
        case Path(r):
            return f"P{r}"
        case Cycle(r):
            return f"C{r}"
        case Complete(r):
            return f"K{r}"
        case Star(r):
            return f"K1_{r}"
        case SubdividedClaw(i, j, k):
            return f"S_{i}_{j}_{k}"
        case Named(name):
            return name
        case Complement(inner):
            return f"co({format_name(inner)})"
        case Wall(h):
            return f"wall({h})"
        case SubdividedWall(h, k):
            return f"swall({h},{k})"
        case Grid(n):
            return f"grid({n})"
        case Sum(parts):
            bits = []
            for mult, sub in parts:
                s = format_name(sub)
                bits.append(f"{mult}{s}" if mult > 1 else s)
            return "+".join(bits)
    raise InputError(f"cannot format {expr!r}")


def _recognize_connected(g: Graph) -> Optional[NameExpr]:
    """Catalog lookup for a connected graph.

    Order: paths, cliques, cycles, stars, subdivided claws, then the named
    five-or-fewer-vertex specials.
    """
    n = g.n
    degs = g.degree_sequence()
    m = len(g.edges)
    if n == 1:
        return Path(1)
    if m == n - 1 and degs[-1] <= 2:
        return Path(n)
    if m == n * (n - 1) // 2:
        return Complete(n)
    if degs[0] == 2 and degs[-1] == 2 and m == n:
        return Cycle(n)
    if m == n - 1 and degs[-1] == n - 1 and n >= 4:
        return Star(n - 1)
    if m == n - 1 and degs.count(1) == 3 and degs[-1] == 3 and degs[-2] <= 2:
        legs = sorted(_claw_leg_lengths(g))
        return SubdividedClaw(*legs)
    from .isomorphism import is_isomorphic

    for name in ("paw", "diamond", "bull", "hammer", "gem"):
        model = realize(Named(name))
        if n == model.n and is_isomorphic(g, model):
            return Named(name)
    return None


def _claw_leg_lengths(g: Graph) -> list[int]:
    centre = max(range(g.n), key=g.degree)
    lengths = []
    for start in g.neighbors(centre):
        prev, cur, dist = centre, start, 1
        while g.degree(cur) == 2:
            nxt = [w for w in g.neighbors(cur) if w != prev][0]
            prev, cur, dist = cur, nxt, dist + 1
        lengths.append(dist)
    return lengths


def _recognize_direct(g: Graph) -> Optional[NameExpr]:
    if g.n == 0:
        return None
    parts: list[NameExpr] = []
    for comp in g.components():
        node = _recognize_connected(induced_subgraph(g, comp))
        if node is None:
            return None
        parts.append(node)
    parts.sort(key=lambda e: (realize(e).n, format_name(e)))
    grouped: list[tuple[int, NameExpr]] = []
    for node in parts:
        if grouped and grouped[-1][1] == node:
            grouped[-1] = (grouped[-1][0] + 1, node)
        else:
            grouped.append((1, node))
    if len(grouped) == 1 and grouped[0][0] == 1:
        return grouped[0][1]
    return Sum(tuple(grouped))


def recognize(g: Graph) -> Optional[NameExpr]:
    """A catalog name realising a graph isomorphic to g, or None."""
    direct = _recognize_direct(g)
    if direct is not None:
        return direct
    co = _recognize_direct(complement(g))
    if co is not None:
        return Complement(co)
    return None
