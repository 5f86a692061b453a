"""Classification of local branchings and critical-branching enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .rewrite import RewriteStep, applicable_steps
from .words import Word, format_word, overlaps

ASPHERICAL = "aspherical"
PEIFFER = "Peiffer"
OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class Branching:
    """A pair of coinitial rewriting steps with its classification."""

    first: RewriteStep
    second: RewriteStep
    kind: str
    critical: bool = False  # meaningful only for overlapping branchings

    @property
    def source(self) -> Word:
        return self.first.source


def classify_branching(f1: RewriteStep, f2: RewriteStep) -> Branching:
    """Classify a local branching as aspherical, Peiffer or overlapping.

    Peiffer means the redex intervals are disjoint (touching intervals
    count); this is the interval form of the context factorization and is
    invariant under swapping the two steps.
    """
    if f1.source != f2.source:
        raise PreconditionError(
            f"not a branching: sources {format_word(f1.source)} and "
            f"{format_word(f2.source)} differ")
    if f1 == f2:
        return Branching(f1, f2, ASPHERICAL)
    if f1.end <= f2.start or f2.end <= f1.start:
        return Branching(f1, f2, PEIFFER)
    critical = (min(f1.start, f2.start) == 0
                and max(f1.end, f2.end) == len(f1.source))
    return Branching(f1, f2, OVERLAPPING, critical)


def orient(f1: RewriteStep, f2: RewriteStep, rule_index) -> tuple[RewriteStep, RewriteStep]:
    """Order a pair of steps: leftmost redex first, ties by rule order."""
    k1 = (f1.start, rule_index[f1.rule])
    k2 = (f2.start, rule_index[f2.rule])
    return (f1, f2) if k1 <= k2 else (f2, f1)


def critical_branchings(p) -> list[Branching]:
    """All critical branchings, one per overlap of every ordered rule pair.

    Built on the superposition word with empty outer contexts, ordered by
    rule-pair declaration order then offset.  The first step is always the
    leftmost redex (ties broken by rule declaration order).
    """
    rule_index = {r: i for i, r in enumerate(p.rules)}
    out = []
    for i, r1 in enumerate(p.rules):
        for j, r2 in enumerate(p.rules):
            if not r1.lhs or not r2.lhs:
                continue
            candidates = [(o.offset, o.superposition) for o in overlaps(r1.lhs, r2.lhs)]
            if i < j and r1.lhs == r2.lhs:
                # distinct rules with identical left sides overlap fully;
                # the word-level search excludes that self-identical case
                candidates.append((0, r1.lhs))
                candidates.sort(key=lambda c: c[0])
            for offset, w in candidates:
                s1 = RewriteStep(Word(), r1, w[len(r1.lhs):])
                s2 = RewriteStep(w[:offset], r2, w[offset + len(r2.lhs):])
                first, second = orient(s1, s2, rule_index)
                b = classify_branching(first, second)
                assert b.kind == OVERLAPPING and b.critical, b
                out.append(b)
    return out


def local_branchings(p, w: Word) -> list[Branching]:
    """All unordered pairs of coinitial steps on `w` (plus aspherical ones),
    oriented leftmost-first."""
    rule_index = {r: i for i, r in enumerate(p.rules)}
    steps = applicable_steps(p, w)
    out = [classify_branching(s, s) for s in steps]
    for s1, s2 in combinations(steps, 2):
        first, second = orient(s1, s2, rule_index)
        out.append(classify_branching(first, second))
    return out
