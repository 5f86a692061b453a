"""Text formats: `.cp` presentation files, shell files and certificates.

A `.cp` file has sections ``[generators]``, ``[rules]``, optional
``[squares]`` and optional ``[precedence]``.  Section content may start on
the header line.  Rules are ``name: word -> word`` (empty word written
``1``), squares are ``name: top=<edge> left=<edge> right=<edge>
bottom=<edge>`` with path/zig-zag edges, and the precedence lists generator
names from greatest to least.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cube import (CellTerm, Shell, format_cell, format_zigzag, parse_cell,
                   parse_zigzag)
from .errors import ParseError
from .polygraph import Polygraph, SquareGen, make_polygraph, validate_polygraph
from .rewrite import Rule, ZigZag
from .words import format_word, parse_word

SECTIONS = ("generators", "rules", "squares", "precedence")
EDGE_NAMES = ("top", "left", "right", "bottom")


@dataclass(frozen=True)
class PolygraphFile:
    """A parsed `.cp` file: the presentation plus the optional precedence."""

    polygraph: Polygraph
    precedence: tuple[str, ...] | None = None


def parse_polygraph(text: str) -> PolygraphFile:
    """Parse a `.cp` file; raises ParseError with a line number on failure."""
    sections: dict[str, list[tuple[int, str]]] = {name: [] for name in SECTIONS}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            close = line.find("]")
            if close < 0:
                raise ParseError("unterminated section header", lineno)
            name = line[1:close].strip()
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno)
            if sections[name]:
                raise ParseError(f"duplicate section [{name}]", lineno)
            current = name
            line = line[close + 1:].strip()
            if not line:
                continue
        if current is None:
            raise ParseError("content before any section header", lineno)
        sections[current].append((lineno, line))

    generators: list[str] = []
    for lineno, line in sections["generators"]:
        generators.extend(line.split())

    rules: list[Rule] = []
    for lineno, line in sections["rules"]:
        name, body = _split_label(line, lineno)
        if "->" not in body:
            raise ParseError("expected 'name: word -> word'", lineno)
        lhs_text, rhs_text = body.split("->", 1)
        lhs = parse_word(lhs_text, generators, lineno)
        rhs = parse_word(rhs_text, generators, lineno)
        if not lhs:
            raise ParseError(f"rule {name}: empty left-hand side", lineno)
        rules.append(Rule(name, lhs, rhs))
    rules_by_name = {r.name: r for r in rules}

    squares: list[SquareGen] = []
    for lineno, line in sections["squares"]:
        name, body = _split_label(line, lineno)
        edges = _parse_edge_fields(body, rules_by_name, lineno)
        squares.append(SquareGen(name, Shell(**edges)))

    precedence = None
    if sections["precedence"]:
        precedence = tuple(tok for _, line in sections["precedence"]
                           for tok in line.split())

    p = make_polygraph(generators, rules, squares)
    errors = [v for v in validate_polygraph(p) if v.severity == "error"]
    if errors:
        raise ParseError("; ".join(v.message for v in errors))
    return PolygraphFile(p, precedence)


def _split_label(line: str, lineno: int) -> tuple[str, str]:
    if ":" not in line:
        raise ParseError("expected 'name: ...'", lineno)
    name, body = line.split(":", 1)
    name = name.strip()
    if not name:
        raise ParseError("missing name before ':'", lineno)
    return name, body


def _parse_edge_fields(body: str, rules, lineno=None) -> dict[str, ZigZag]:
    """Parse ``top=... left=... right=... bottom=...`` in any order."""
    markers = []
    for edge in EDGE_NAMES:
        pos = body.find(edge + "=")
        if pos < 0:
            raise ParseError(f"missing edge '{edge}='", lineno)
        markers.append((pos, edge))
    markers.sort()
    edges = {}
    for (pos, edge), nxt in zip(markers, markers[1:] + [(len(body), None)]):
        chunk = body[pos + len(edge) + 1:nxt[0]]
        edges[edge] = parse_zigzag(chunk, rules, lineno)
    return edges


def serialize_polygraph(pf: PolygraphFile) -> str:
    p = pf.polygraph
    lines = ["[generators]"]
    if p.generators:
        lines.append(" ".join(p.generators))
    lines.append("[rules]")
    for r in p.rules:
        lines.append(f"{r.name}: {format_word(r.lhs)} -> {format_word(r.rhs)}")
    if p.squares:
        lines.append("[squares]")
        for sq in p.squares:
            lines.append(f"{sq.name}: " + format_shell(sq.shell, sep=" "))
    if pf.precedence is not None:
        lines.append("[precedence]")
        lines.append(" ".join(pf.precedence))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Shells and certificates

def format_shell(s: Shell, sep: str = "\n") -> str:
    return sep.join(f"{edge}={format_zigzag(getattr(s, edge))}"
                    for edge in EDGE_NAMES)


def parse_shell(text: str, rules) -> Shell:
    """Parse a shell file: one ``edge=<path-or-zig-zag>`` line per edge."""
    edges = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError("expected 'edge=<path>'", lineno)
        edge, body = line.split("=", 1)
        edge = edge.strip()
        if edge not in EDGE_NAMES:
            raise ParseError(f"unknown edge {edge!r}", lineno)
        if edge in edges:
            raise ParseError(f"duplicate edge {edge!r}", lineno)
        edges[edge] = parse_zigzag(body, rules, lineno)
    missing = [e for e in EDGE_NAMES if e not in edges]
    if missing:
        raise ParseError("missing edges: " + ", ".join(missing))
    return Shell(**edges)


def serialize_certificate(shell: Shell, cell: CellTerm) -> str:
    """A certificate restates its target shell, then gives the cell term."""
    return format_shell(shell) + "\n" + format_cell(cell) + "\n"


def parse_certificate(text: str, rules, squares) -> tuple[Shell, CellTerm]:
    lines = text.splitlines()
    header, rest = [], []
    for i, line in enumerate(lines):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if any(stripped.startswith(e + "=") for e in EDGE_NAMES):
            header.append(line)
        else:
            rest = lines[i:]
            break
    shell = parse_shell("\n".join(header), rules)
    cell = parse_cell("\n".join(rest), rules, squares)
    return shell, cell
