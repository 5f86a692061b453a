"""The rewriting engine: steps, paths, zig-zags and normalization.

A rewriting step is a rule applied in a context ``u . lhs . v``.  Paths are
composites of steps; zig-zags additionally allow formally inverted steps and
are kept reduced at all times (no step immediately followed by its inverse),
so that plain equality compares them as elements of the free groupoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Mapping

from .errors import FuelExhaustedError, ParseError, PreconditionError
from .words import EMPTY, Word, concat, find_occurrences, format_word, parse_word

if TYPE_CHECKING:  # pragma: no cover
    from .polygraph import Polygraph

DEFAULT_FUEL = 10000

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"


@dataclass(frozen=True)
class Rule:
    """An oriented relation lhs -> rhs between words."""

    name: str
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class RewriteStep:
    """A rule applied in context: ``left . lhs . right -> left . rhs . right``."""

    left: Word
    rule: Rule
    right: Word

    @property
    def source(self) -> Word:
        return self.left + self.rule.lhs + self.right

    @property
    def target(self) -> Word:
        return self.left + self.rule.rhs + self.right

    @property
    def start(self) -> int:
        """Index in the source word where the redex begins."""
        return len(self.left)

    @property
    def end(self) -> int:
        return len(self.left) + len(self.rule.lhs)

    def whisker(self, u: Word, v: Word) -> "RewriteStep":
        return RewriteStep(u + self.left, self.rule, self.right + v)


@dataclass(frozen=True)
class Path:
    """A finite composite of rewriting steps, possibly empty."""

    source: Word
    steps: tuple[RewriteStep, ...] = ()

    def __post_init__(self):
        at = self.source
        for st in self.steps:
            if st.source != at:
                raise PreconditionError(
                    f"path does not chain: expected source {format_word(at)}, "
                    f"got {format_word(st.source)}")
            at = st.target

    @property
    def target(self) -> Word:
        return self.steps[-1].target if self.steps else self.source

    def then(self, other: "Path") -> "Path":
        if other.source != self.target:
            raise PreconditionError(
                f"cannot compose paths: {format_word(self.target)} != "
                f"{format_word(other.source)}")
        return Path(self.source, self.steps + other.steps)

    def whisker(self, u: Word, v: Word) -> "Path":
        return Path(u + self.source + v,
                    tuple(st.whisker(u, v) for st in self.steps))

    def to_zigzag(self) -> "ZigZag":
        return ZigZag(self.source, tuple(SignedStep(st) for st in self.steps))


def identity_path(w: Word) -> Path:
    return Path(w)


@dataclass(frozen=True)
class SignedStep:
    """A rewriting step traversed forwards (+) or backwards (-)."""

    step: RewriteStep
    positive: bool = True

    @property
    def source(self) -> Word:
        return self.step.source if self.positive else self.step.target

    @property
    def target(self) -> Word:
        return self.step.target if self.positive else self.step.source

    def inverse(self) -> "SignedStep":
        return SignedStep(self.step, not self.positive)

    def whisker(self, u: Word, v: Word) -> "SignedStep":
        return SignedStep(self.step.whisker(u, v), self.positive)


def reduce_signed_steps(steps: Iterable[SignedStep]) -> tuple[SignedStep, ...]:
    """Cancel adjacent inverse pairs until none remain (stack scan)."""
    out: list[SignedStep] = []
    for s in steps:
        if out and out[-1].step == s.step and out[-1].positive != s.positive:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class ZigZag:
    """A reduced composite of signed steps (morphism of the free groupoid)."""

    source: Word
    steps: tuple[SignedStep, ...] = ()

    def __post_init__(self):
        at = self.source
        for s in self.steps:
            if s.source != at:
                raise PreconditionError(
                    f"zig-zag does not chain: expected source {format_word(at)}, "
                    f"got {format_word(s.source)}")
            at = s.target
        if reduce_signed_steps(self.steps) != self.steps:
            raise PreconditionError("zig-zag is not reduced; use zigzag()")

    @property
    def target(self) -> Word:
        return self.steps[-1].target if self.steps else self.source

    @property
    def is_positive(self) -> bool:
        return all(s.positive for s in self.steps)

    def inverse(self) -> "ZigZag":
        return ZigZag(self.target, tuple(s.inverse() for s in reversed(self.steps)))

    def compose(self, other: "ZigZag") -> "ZigZag":
        if other.source != self.target:
            raise PreconditionError(
                f"cannot compose zig-zags: {format_word(self.target)} != "
                f"{format_word(other.source)}")
        return zigzag(self.source, self.steps + other.steps)

    def whisker(self, u: Word, v: Word) -> "ZigZag":
        # whiskering never creates new cancellations
        return ZigZag(u + self.source + v,
                      tuple(s.whisker(u, v) for s in self.steps))

    def to_path(self) -> Path:
        if not self.is_positive:
            raise PreconditionError("zig-zag contains inverse steps")
        return Path(self.source, tuple(s.step for s in self.steps))


def zigzag(source: Word, steps: Iterable[SignedStep] = ()) -> ZigZag:
    """Build a zig-zag, reducing adjacent inverse pairs."""
    return ZigZag(source, reduce_signed_steps(steps))


def identity_zigzag(w: Word) -> ZigZag:
    return ZigZag(w)


def path_product(f, g):
    """Monoid product of two 1-cells, as the left-first interleaving.

    ``f . g`` is `f` whiskered on the right by source(g), followed by `g`
    whiskered on the left by target(f).  Both arguments must be of the same
    kind (Path or ZigZag); the result is of that kind.
    """
    if isinstance(f, Path) and isinstance(g, Path):
        return f.whisker(EMPTY, g.source).then(g.whisker(f.target, EMPTY))
    if isinstance(f, ZigZag) and isinstance(g, ZigZag):
        return f.whisker(EMPTY, g.source).compose(g.whisker(f.target, EMPTY))
    raise PreconditionError("path_product arguments must both be Path or both ZigZag")


# ---------------------------------------------------------------------------
# Rewriting over a polygraph

def applicable_steps(p: "Polygraph", w: Word) -> list[RewriteStep]:
    """All steps with source `w`, ordered by redex position then rule order."""
    rule_index = {r: i for i, r in enumerate(p.rules)}
    found = []
    for rule in p.rules:
        if not rule.lhs:
            continue
        for i in find_occurrences(rule.lhs, w):
            found.append(RewriteStep(w[:i], rule, w[i + len(rule.lhs):]))
    found.sort(key=lambda st: (st.start, rule_index[st.rule]))
    return found


def is_normal_form(p: "Polygraph", w: Word) -> bool:
    return not applicable_steps(p, w)


def normalize(p: "Polygraph", w: Word, strategy: str = LEFTMOST,
              fuel: int = DEFAULT_FUEL) -> Path:
    """Rewrite `w` to a normal form, choosing steps by the given strategy."""
    if strategy not in (LEFTMOST, RIGHTMOST):
        raise PreconditionError(f"unknown strategy {strategy!r}")
    steps = []
    at = w
    for _ in range(fuel):
        options = applicable_steps(p, at)
        if not options:
            return Path(w, tuple(steps))
        # applicable_steps is ordered by (start, rule order); for the
        # rightmost strategy take the greatest start, still breaking ties
        # by rule declaration order.
        if strategy == LEFTMOST:
            chosen = options[0]
        else:
            last_start = options[-1].start
            chosen = next(st for st in options if st.start == last_start)
        steps.append(chosen)
        at = chosen.target
    raise FuelExhaustedError(
        f"no normal form within {fuel} steps from {format_word(w)} "
        "(possible non-termination)")


def verify_termination_order(p: "Polygraph", precedence) -> bool:
    """True iff every rule strictly decreases the shortlex order.

    `precedence` lists the generator names from greatest to least and must
    cover the alphabet exactly.
    """
    rank = {name: i for i, name in enumerate(precedence)}
    if len(rank) != len(tuple(precedence)):
        raise PreconditionError("precedence contains duplicates")
    missing = [g for g in p.generators if g not in rank]
    if missing:
        raise PreconditionError(f"precedence does not cover generators: {missing}")

    def shortlex_key(w: Word):
        return (len(w), tuple(rank[x] for x in w.letters))

    # greater shortlex key = longer, or earlier in precedence at the first
    # difference; rank 0 is the greatest letter so smaller tuples are greater.
    def greater(a: Word, b: Word) -> bool:
        ka, kb = shortlex_key(a), shortlex_key(b)
        if ka[0] != kb[0]:
            return ka[0] > kb[0]
        return ka[1] < kb[1]

    return all(greater(r.lhs, r.rhs) for r in p.rules)


# ---------------------------------------------------------------------------
# Textual forms

def format_step(st: RewriteStep) -> str:
    return f"{format_word(st.left)} | {st.rule.name} | {format_word(st.right)}"


def parse_step(text: str, rules: Mapping[str, Rule], line=None) -> RewriteStep:
    parts = text.split("|")
    if len(parts) != 3:
        raise ParseError(f"expected 'u | rule | v', got {text.strip()!r}", line)
    u = parse_word(parts[0], line=line)
    v = parse_word(parts[2], line=line)
    name = parts[1].strip()
    if name not in rules:
        raise ParseError(f"unknown rule {name!r}", line)
    return RewriteStep(u, rules[name], v)


def format_signed_step(s: SignedStep) -> str:
    prefix = "" if s.positive else "- "
    return prefix + format_step(s.step)


def parse_signed_step(text: str, rules: Mapping[str, Rule], line=None) -> SignedStep:
    stripped = text.strip()
    positive = True
    if stripped.startswith("-"):
        positive = False
        stripped = stripped[1:]
    elif stripped.startswith("+"):
        stripped = stripped[1:]
    return SignedStep(parse_step(stripped, rules, line), positive)


def format_path(p: Path) -> str:
    return " ; ".join([format_word(p.source)] + [format_step(st) for st in p.steps])


def format_zigzag(z: ZigZag) -> str:
    return " ; ".join([format_word(z.source)]
                      + [format_signed_step(s) for s in z.steps])


def format_edge(edge) -> str:
    """Serialize a Path or ZigZag edge."""
    if isinstance(edge, Path):
        return format_path(edge)
    return format_zigzag(edge)


def parse_path(text: str, rules: Mapping[str, Rule], line=None) -> Path:
    chunks = text.split(";")
    source = parse_word(chunks[0], line=line)
    return Path(source, tuple(parse_step(c, rules, line) for c in chunks[1:]))


def parse_zigzag(text: str, rules: Mapping[str, Rule], line=None) -> ZigZag:
    chunks = text.split(";")
    source = parse_word(chunks[0], line=line)
    steps = tuple(parse_signed_step(c, rules, line) for c in chunks[1:])
    try:
        return ZigZag(source, steps)
    except PreconditionError as exc:
        raise ParseError(str(exc), line) from exc
