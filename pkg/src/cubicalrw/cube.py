"""Syntactic square cells with face semantics, and the shell/filler checker.

Cells are immutable term trees.  Every node stores the shell computed from
its children at construction time, so face lookup is O(1) and the
composability preconditions are enforced exactly once, when the node is
built.  Cell equality is purely structural: no cell-level rewriting is
performed beyond cancelling double rotations (T^2 = S1^2 = S2^2 = id).

Shell edges are uniformly reduced zig-zags; an edge that happens to be
all-positive is the embedding of a path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import FaceMismatchError, ParseError, PreconditionError
from .rewrite import (Path, Rule, ZigZag, format_edge, format_zigzag,
                      identity_zigzag, parse_zigzag, path_product)
from .words import Word, format_word, parse_word

VERTICAL = "v"
HORIZONTAL = "h"
PRODUCT = "p"

EPS1 = "e1"
EPS2 = "e2"
GAMMA_MINUS = "g-"
GAMMA_PLUS = "g+"

T = "T"
S1 = "S1"
S2 = "S2"

REGIME_32 = "(3,2)"
REGIME_31 = "(3,1)"


def as_edge(edge) -> ZigZag:
    """Coerce a Path to its all-positive zig-zag embedding."""
    if isinstance(edge, Path):
        return edge.to_zigzag()
    if isinstance(edge, ZigZag):
        return edge
    raise PreconditionError(f"not a 1-cell: {edge!r}")


@dataclass(frozen=True)
class Shell:
    """A compatible quadruple of boundary edges of a square."""

    top: ZigZag
    bottom: ZigZag
    left: ZigZag
    right: ZigZag

    @staticmethod
    def of(top, bottom, left, right) -> "Shell":
        return Shell(as_edge(top), as_edge(bottom), as_edge(left), as_edge(right))

    def corner_violations(self) -> list[str]:
        out = []
        if self.top.source != self.left.source:
            out.append("source(top) != source(left)")
        if self.top.target != self.right.source:
            out.append("target(top) != source(right)")
        if self.left.target != self.bottom.source:
            out.append("target(left) != source(bottom)")
        if self.bottom.target != self.right.target:
            out.append("target(bottom) != target(right)")
        return out

    def transpose(self) -> "Shell":
        return Shell(top=self.left, bottom=self.right,
                     left=self.top, right=self.bottom)


def check_shell(s: Shell) -> bool:
    """The four corner conditions of the cubical face relation."""
    return not s.corner_violations()


class CellTerm:
    """Base class of cell term nodes; `shell` holds the computed faces."""

    shell: Shell


def faces(c: CellTerm) -> Shell:
    return c.shell


@dataclass(frozen=True)
class Id2(CellTerm):
    """The doubly degenerate square on a word; all four faces are identities."""

    word: Word
    shell: Shell = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        e = identity_zigzag(self.word)
        object.__setattr__(self, "shell", Shell(e, e, e, e))


@dataclass(frozen=True)
class Degenerate(CellTerm):
    """A degeneracy (e1, e2) or connection (g-, g+) on a single edge."""

    kind: str
    edge: ZigZag
    shell: Shell = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        f = self.edge
        ids = identity_zigzag(f.source)
        idt = identity_zigzag(f.target)
        if self.kind == EPS1:
            sh = Shell(top=f, bottom=f, left=ids, right=idt)
        elif self.kind == EPS2:
            sh = Shell(top=ids, bottom=idt, left=f, right=f)
        elif self.kind == GAMMA_MINUS:
            sh = Shell(top=f, bottom=idt, left=f, right=idt)
        elif self.kind == GAMMA_PLUS:
            sh = Shell(top=ids, bottom=f, left=ids, right=f)
        else:
            raise PreconditionError(f"unknown degeneracy kind {self.kind!r}")
        object.__setattr__(self, "shell", sh)


@dataclass(frozen=True)
class Gen(CellTerm):
    """A declared square generator, known by name and by its shell."""

    name: str
    declared: Shell
    shell: Shell = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        bad = self.declared.corner_violations()
        if bad:
            raise PreconditionError(
                f"square generator {self.name}: " + "; ".join(bad))
        object.__setattr__(self, "shell", self.declared)


@dataclass(frozen=True)
class Comp(CellTerm):
    """A binary composite: vertical, horizontal, or the monoid product."""

    direction: str
    a: CellTerm
    b: CellTerm
    shell: Shell = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        sa, sb = self.a.shell, self.b.shell
        if self.direction == VERTICAL:
            if sa.bottom != sb.top:
                raise FaceMismatchError(
                    "vertical composition: bottom of first "
                    f"({format_zigzag(sa.bottom)}) != top of second "
                    f"({format_zigzag(sb.top)})")
            sh = Shell(top=sa.top, bottom=sb.bottom,
                       left=sa.left.compose(sb.left),
                       right=sa.right.compose(sb.right))
        elif self.direction == HORIZONTAL:
            if sa.right != sb.left:
                raise FaceMismatchError(
                    "horizontal composition: right of first "
                    f"({format_zigzag(sa.right)}) != left of second "
                    f"({format_zigzag(sb.left)})")
            sh = Shell(top=sa.top.compose(sb.top),
                       bottom=sa.bottom.compose(sb.bottom),
                       left=sa.left, right=sb.right)
        elif self.direction == PRODUCT:
            sh = Shell(top=path_product(sa.top, sb.top),
                       bottom=path_product(sa.bottom, sb.bottom),
                       left=path_product(sa.left, sb.left),
                       right=path_product(sa.right, sb.right))
        else:
            raise PreconditionError(f"unknown composition {self.direction!r}")
        object.__setattr__(self, "shell", sh)


@dataclass(frozen=True)
class Rotate(CellTerm):
    """Transposition T, or a groupoid inverse S1/S2, of a cell."""

    kind: str
    child: CellTerm
    shell: Shell = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.child, Rotate) and self.child.kind == self.kind:
            raise PreconditionError(
                f"double {self.kind} rotation; use rotate() which cancels it")
        s = self.child.shell
        if self.kind == T:
            sh = s.transpose()
        elif self.kind == S1:
            sh = Shell(top=s.bottom, bottom=s.top,
                       left=s.left.inverse(), right=s.right.inverse())
        elif self.kind == S2:
            sh = Shell(top=s.top.inverse(), bottom=s.bottom.inverse(),
                       left=s.right, right=s.left)
        else:
            raise PreconditionError(f"unknown rotation kind {self.kind!r}")
        object.__setattr__(self, "shell", sh)


# ---------------------------------------------------------------------------
# Smart constructors

def id2(w: Word) -> CellTerm:
    return Id2(w)


def degenerate(kind: str, edge) -> CellTerm:
    return Degenerate(kind, as_edge(edge))


def eps1(edge) -> CellTerm:
    return Degenerate(EPS1, as_edge(edge))


def eps2(edge) -> CellTerm:
    return Degenerate(EPS2, as_edge(edge))


def gamma_minus(edge) -> CellTerm:
    return Degenerate(GAMMA_MINUS, as_edge(edge))


def gamma_plus(edge) -> CellTerm:
    return Degenerate(GAMMA_PLUS, as_edge(edge))


def gen(name: str, shell: Shell) -> CellTerm:
    return Gen(name, shell)


def compose(direction: str, a: CellTerm, b: CellTerm) -> CellTerm:
    return Comp(direction, a, b)


def rotate(kind: str, c: CellTerm, regime: str = REGIME_31) -> CellTerm:
    """Apply T/S1/S2, cancelling an immediate double rotation."""
    if kind in (S1, S2) and regime != REGIME_31:
        raise PreconditionError(f"{kind} rotation requires the (3,1) regime")
    if isinstance(c, Rotate) and c.kind == kind:
        return c.child
    return Rotate(kind, c)


def validate_filler(c: CellTerm, s: Shell) -> bool:
    return c.shell == s


def face_mismatches(c: CellTerm, s: Shell) -> list[str]:
    """Names of the faces on which the cell disagrees with the shell."""
    got = c.shell
    return [name for name in ("top", "left", "right", "bottom")
            if getattr(got, name) != getattr(s, name)]


# ---------------------------------------------------------------------------
# Serialization: parenthesized prefix expressions

def format_cell(c: CellTerm) -> str:
    if isinstance(c, Id2):
        return f"(id2 {format_word(c.word)})"
    if isinstance(c, Degenerate):
        return f"({c.kind} {format_zigzag(c.edge)})"
    if isinstance(c, Gen):
        return f"(gen {c.name})"
    if isinstance(c, Comp):
        return f"({c.direction} {format_cell(c.a)} {format_cell(c.b)})"
    if isinstance(c, Rotate):
        return f"({c.kind} {format_cell(c.child)})"
    raise PreconditionError(f"not a cell term: {c!r}")


_LEAF_KEYWORDS = {EPS1, EPS2, GAMMA_MINUS, GAMMA_PLUS, "id2", "gen"}
_COMP_KEYWORDS = {VERTICAL, HORIZONTAL, PRODUCT}
_ROTATE_KEYWORDS = {T, S1, S2}


def parse_cell(text: str, rules: Mapping[str, Rule],
               squares: Mapping[str, Shell]) -> CellTerm:
    """Parse a prefix cell expression.  Inverse of format_cell."""
    cell, rest = _parse_cell_at(text.strip(), rules, squares)
    if rest.strip():
        raise ParseError(f"trailing input after cell expression: {rest.strip()!r}")
    return cell


def _parse_cell_at(text, rules, squares):
    text = text.lstrip()
    if not text.startswith("("):
        raise ParseError(f"expected '(' in cell expression at {text[:20]!r}")
    body = text[1:].lstrip()
    keyword = body.split(None, 1)[0] if body.split(None, 1) else ""
    rest = body[len(keyword):]
    if keyword in _LEAF_KEYWORDS:
        close = rest.find(")")
        if close < 0:
            raise ParseError("unbalanced '(' in cell expression")
        payload, rest = rest[:close].strip(), rest[close + 1:]
        if keyword == "id2":
            return Id2(parse_word(payload)), rest
        if keyword == "gen":
            if payload not in squares:
                raise ParseError(f"unknown square generator {payload!r}")
            return Gen(payload, squares[payload]), rest
        return Degenerate(keyword, parse_zigzag(payload, rules)), rest
    if keyword in _COMP_KEYWORDS:
        a, rest = _parse_cell_at(rest, rules, squares)
        b, rest = _parse_cell_at(rest, rules, squares)
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise ParseError(f"expected ')' after ({keyword} ...)")
        return Comp(keyword, a, b), rest[1:]
    if keyword in _ROTATE_KEYWORDS:
        child, rest = _parse_cell_at(rest, rules, squares)
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise ParseError(f"expected ')' after ({keyword} ...)")
        return Rotate(keyword, child), rest[1:]
    raise ParseError(f"unknown cell constructor {keyword!r}")
