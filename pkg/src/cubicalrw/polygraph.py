"""Presentations: generators, rules and declared square generators.

A polygraph is immutable after construction.  Structural validation is a
report, never an exception: every downstream operation's precondition on the
presentation corresponds to an error entry here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cube import REGIME_31, REGIME_32, Shell
from .rewrite import Rule
from .words import Word, is_valid_generator_name

REGIME_2 = "2-polygraph"
REGIMES = (REGIME_2, REGIME_32, REGIME_31)

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class SquareGen:
    """A declared square generator, given by its full shell."""

    name: str
    shell: Shell


@dataclass(frozen=True)
class Polygraph:
    generators: tuple[str, ...]
    rules: tuple[Rule, ...]
    squares: tuple[SquareGen, ...] = ()
    regime: str = REGIME_32

    def rules_by_name(self) -> dict[str, Rule]:
        return {r.name: r for r in self.rules}

    def squares_by_name(self) -> dict[str, Shell]:
        return {s.name: s.shell for s in self.squares}

    def with_squares(self, squares: Iterable[SquareGen],
                     regime: str | None = None) -> "Polygraph":
        return Polygraph(self.generators, self.rules,
                         self.squares + tuple(squares),
                         regime or self.regime)


def make_polygraph(generators, rules, squares=(), regime=None) -> Polygraph:
    """Convenience constructor; infers the regime when not given."""
    squares = tuple(squares)
    if regime is None:
        if not squares:
            regime = REGIME_2
        elif all(_shell_positive(s.shell) for s in squares):
            regime = REGIME_32
        else:
            regime = REGIME_31
    return Polygraph(tuple(generators), tuple(rules), squares, regime)


def _shell_positive(shell: Shell) -> bool:
    return all(edge.is_positive
               for edge in (shell.top, shell.bottom, shell.left, shell.right))


@dataclass(frozen=True)
class Violation:
    severity: str  # ERROR or WARNING
    message: str

    def __str__(self):
        return f"{self.severity}: {self.message}"


def validate_polygraph(p: Polygraph) -> list[Violation]:
    """Structural validation report; empty (of errors) iff valid."""
    out: list[Violation] = []

    def error(msg):
        out.append(Violation(ERROR, msg))

    if p.regime not in REGIMES:
        error(f"unknown regime {p.regime!r}")

    alphabet = set(p.generators)
    seen = set()
    for g in p.generators:
        if not is_valid_generator_name(g):
            error(f"invalid generator name {g!r}")
        if g in seen:
            error(f"duplicate generator {g!r}")
        seen.add(g)

    def check_word(w: Word, owner: str):
        for letter in w.letters:
            if letter not in alphabet:
                error(f"{owner}: undeclared generator {letter!r}")

    seen = set()
    for r in p.rules:
        if not is_valid_generator_name(r.name):
            error(f"invalid rule name {r.name!r}")
        if r.name in seen:
            error(f"duplicate rule {r.name!r}")
        seen.add(r.name)
        if not r.lhs:
            error(f"rule {r.name}: empty left-hand side")
        check_word(r.lhs, f"rule {r.name}")
        check_word(r.rhs, f"rule {r.name}")
        if r.lhs == r.rhs:
            out.append(Violation(
                WARNING, f"rule {r.name}: left and right sides are equal "
                "(breaks termination)"))

    declared_rules = set(p.rules)
    seen = set()
    for sq in p.squares:
        if not is_valid_generator_name(sq.name):
            error(f"invalid square name {sq.name!r}")
        if sq.name in seen:
            error(f"duplicate square {sq.name!r}")
        seen.add(sq.name)
        if p.regime == REGIME_2:
            error(f"square {sq.name}: 2-polygraphs have no square generators")
        for face in ("top", "bottom", "left", "right"):
            edge = getattr(sq.shell, face)
            check_word(edge.source, f"square {sq.name} ({face})")
            for s in edge.steps:
                if s.step.rule not in declared_rules:
                    error(f"square {sq.name} ({face}): undeclared rule "
                          f"{s.step.rule.name!r}")
                if not s.positive and p.regime == REGIME_32:
                    error(f"square {sq.name} ({face}): inverse step in "
                          "(3,2) regime")
        for msg in sq.shell.corner_violations():
            error(f"square {sq.name}: shell corner mismatch: {msg}")

    return out


def is_valid(p: Polygraph) -> bool:
    return not any(v.severity == ERROR for v in validate_polygraph(p))
