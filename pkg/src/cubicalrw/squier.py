"""Witness synthesis: completing a convergent presentation with one square
generator per critical branching, and constructively filling shells.

Every synthesized cell is checked against its target shell before being
returned; the face checker (cube.validate_filler) is the conformance
authority, not the particular pasting used here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branching import (ASPHERICAL, OVERLAPPING, PEIFFER, classify_branching,
                        critical_branchings)
from .cube import (HORIZONTAL, PRODUCT, S1, S2, T, VERTICAL, CellTerm, Gen,
                   Shell, compose, eps1, eps2, gamma_minus, gamma_plus, id2,
                   rotate, validate_filler)
from .errors import (FuelExhaustedError, IncompleteCompletionError,
                     PreconditionError, TerminationOrderError)
from .polygraph import Polygraph, REGIME_32, SquareGen
from .rewrite import (DEFAULT_FUEL, LEFTMOST, Path, RewriteStep, SignedStep,
                      ZigZag, is_normal_form, normalize,
                      verify_termination_order)
from .words import EMPTY, Word, format_word


def step_zigzag(st: RewriteStep) -> ZigZag:
    return ZigZag(st.source, (SignedStep(st),))


@dataclass(frozen=True)
class Completion:
    """A presentation together with squares covering its critical branchings.

    `base` is the original presentation; `polygraph` additionally carries the
    squares.  `pairs` maps the ordered step pair of each covered critical
    branching to its square generator."""

    base: Polygraph
    polygraph: Polygraph
    added: tuple[SquareGen, ...]
    pairs: "dict[tuple[RewriteStep, RewriteStep], SquareGen]"

    @staticmethod
    def from_polygraph(p: Polygraph) -> "Completion":
        """Recover a completion from a presentation with declared squares.

        Squares are matched to critical branchings by their top/left faces
        (directly or transposed); unmatched branchings surface later as
        IncompleteCompletionError when a filler needs them."""
        pairs = {}
        for b in critical_branchings(p):
            t, l = step_zigzag(b.first), step_zigzag(b.second)
            for sq in p.squares:
                if sq.shell.top == t and sq.shell.left == l:
                    pairs[(b.first, b.second)] = sq
                    break
                if sq.shell.top == l and sq.shell.left == t:
                    pairs[(b.second, b.first)] = sq
                    break
        return Completion(p, p, (), pairs)


def squier_completion(p: Polygraph, precedence,
                      fuel: int = DEFAULT_FUEL) -> Completion:
    """Add one square generator per critical branching.

    The top/left faces are the two steps of the branching; the right/bottom
    faces are leftmost normalizing paths from their targets, which end at the
    common normal form of the superposition word."""
    if not verify_termination_order(p, precedence):
        raise TerminationOrderError(
            "rules do not decrease the shortlex order for the given precedence")
    added = []
    pairs = {}
    for i, b in enumerate(critical_branchings(p)):
        right = normalize(p, b.first.target, LEFTMOST, fuel)
        bottom = normalize(p, b.second.target, LEFTMOST, fuel)
        if right.target != bottom.target:
            raise PreconditionError(
                f"branching on {format_word(b.source)} resolves to distinct "
                "normal forms (system not confluent?)")
        sq = SquareGen(f"A{i}", Shell.of(top=step_zigzag(b.first),
                                         bottom=bottom,
                                         left=step_zigzag(b.second),
                                         right=right))
        added.append(sq)
        pairs[(b.first, b.second)] = sq
    added = tuple(added)
    return Completion(p, p.with_squares(added, REGIME_32), added, pairs)


# ---------------------------------------------------------------------------
# Fillers

def local_filler(c: Completion, f1: RewriteStep, f2: RewriteStep) -> CellTerm:
    """A cell whose top face is `f1` and left face is `f2`.

    Aspherical branchings are filled by a connection, Peiffer ones by a
    product of degeneracies, overlapping ones by a (possibly transposed and
    whiskered) square generator of the completion."""
    b = classify_branching(f1, f2)
    if b.kind == ASPHERICAL:
        cell = gamma_minus(step_zigzag(f1))
    elif b.kind == PEIFFER:
        cell = _peiffer_cell(f1, f2)
    else:
        cell = _overlap_cell(c, f1, f2)
    sh = cell.shell
    assert sh.top == step_zigzag(f1) and sh.left == step_zigzag(f2), \
        "local filler does not match its branching"
    return cell


def _peiffer_cell(f1: RewriteStep, f2: RewriteStep) -> CellTerm:
    if f2.start < f1.start:
        return rotate(T, _peiffer_cell(f2, f1))
    # f1 rewrites strictly left of f2: the word splits as
    # prefix . lhs1 . middle . lhs2 . suffix
    w = f1.source
    middle = w[f1.end:f2.start]
    left_core = RewriteStep(f1.left, f1.rule, EMPTY)
    right_core = RewriteStep(middle, f2.rule, f2.right)
    return compose(PRODUCT, eps1(step_zigzag(left_core)),
                   eps2(step_zigzag(right_core)))


def _strip(st: RewriteStep, prefix: int, suffix: int) -> RewriteStep:
    """Remove `prefix` letters of left context and `suffix` of right."""
    right = st.right.letters
    return RewriteStep(Word(st.left.letters[prefix:]), st.rule,
                       Word(right[:len(right) - suffix]))


def _overlap_cell(c: Completion, f1: RewriteStep, f2: RewriteStep) -> CellTerm:
    w = f1.source
    k = min(f1.start, f2.start)
    j = max(f1.end, f2.end)
    suffix = len(w) - j
    c1, c2 = _strip(f1, k, suffix), _strip(f2, k, suffix)
    if (c1, c2) in c.pairs:
        sq = c.pairs[(c1, c2)]
        cell = Gen(sq.name, sq.shell)
    elif (c2, c1) in c.pairs:
        sq = c.pairs[(c2, c1)]
        cell = rotate(T, Gen(sq.name, sq.shell))
    else:
        raise IncompleteCompletionError(
            "incomplete square set: no generator for the critical branching "
            f"on {format_word(c1.source)}")
    u, v = w[:k], w[j:]
    if u:
        cell = compose(PRODUCT, id2(u), cell)
    if v:
        cell = compose(PRODUCT, cell, id2(v))
    return cell


def fill_square(c: Completion, f: Path, g: Path,
                fuel: int = DEFAULT_FUEL) -> CellTerm:
    """Fill the shell (top=g, left=f, right=id, bottom=id).

    Both paths must share their source and end at normal forms (necessarily
    the same word)."""
    p = c.base
    if f.source != g.source:
        raise PreconditionError("square filling: paths have different sources")
    for path in (f, g):
        if not is_normal_form(p, path.target):
            raise PreconditionError(
                f"square filling: {format_word(path.target)} is not a normal form")
    if f.target != g.target:
        raise PreconditionError(
            "square filling: paths reach distinct normal forms "
            f"({format_word(f.target)} vs {format_word(g.target)})")
    cell = _fill_square(c, f, g, fuel)
    assert validate_filler(cell, Shell.of(
        top=g, bottom=Path(f.target), left=f, right=Path(g.target)))
    return cell


def _fill_square(c: Completion, f: Path, g: Path, fuel: int) -> CellTerm:
    if fuel <= 0:
        raise FuelExhaustedError("square filling exceeded its recursion budget")
    if not f.steps and not g.steps:
        return id2(f.source)
    if not f.steps or not g.steps:
        # an empty side means the shared source is already normal
        raise PreconditionError("square filling: empty path at a non-normal word")
    f1, f_rest = f.steps[0], Path(f.steps[0].target, f.steps[1:])
    g1, g_rest = g.steps[0], Path(g.steps[0].target, g.steps[1:])
    a = local_filler(c, g1, f1)
    right_a = a.shell.right.to_path()
    bottom_a = a.shell.bottom.to_path()
    h = normalize(c.base, right_a.target, LEFTMOST, fuel)
    q1 = _fill_square(c, right_a.then(h), g_rest, fuel - 1)
    q2 = _fill_square(c, f_rest, bottom_a.then(h), fuel - 1)
    # extend the far corner of `a` down to the normal form, then paste
    extend = compose(HORIZONTAL, eps1(bottom_a), gamma_plus(h))
    cell = compose(VERTICAL, a, extend)
    cell = compose(HORIZONTAL, cell, q1)
    return compose(VERTICAL, cell, q2)


def fill_zigzag(c: Completion, f: ZigZag, g1: Path, g2: Path,
                fuel: int = DEFAULT_FUEL) -> CellTerm:
    """Fill the shell (top=f, left=g1, right=g2, bottom=id).

    `f` may traverse inverse steps; `g1` and `g2` are normalizing paths from
    its endpoints."""
    p = c.base
    if g1.source != f.source or g2.source != f.target:
        raise PreconditionError("zig-zag filling: side paths do not match endpoints")
    for path in (g1, g2):
        if not is_normal_form(p, path.target):
            raise PreconditionError(
                f"zig-zag filling: {format_word(path.target)} is not a normal form")
    if g1.target != g2.target:
        raise PreconditionError(
            "zig-zag filling: side paths reach distinct normal forms "
            f"({format_word(g1.target)} vs {format_word(g2.target)})")
    cell = _fill_zigzag(c, f, g1, g2, fuel)
    assert validate_filler(cell, Shell.of(
        top=f, bottom=Path(g1.target), left=g1, right=g2))
    return cell


def _fill_zigzag(c: Completion, f: ZigZag, g1: Path, g2: Path,
                 fuel: int) -> CellTerm:
    if fuel <= 0:
        raise FuelExhaustedError("zig-zag filling exceeded its recursion budget")
    if not f.steps and not g1.steps and not g2.steps:
        return id2(f.source)
    if f.is_positive:
        # fold g2 around the corner and fill the resulting plain square
        fold = compose(HORIZONTAL, eps1(f), gamma_plus(g2))
        square = _fill_square(c, g1, f.to_path().then(g2), fuel)
        return compose(VERTICAL, fold, square)
    if len(f.steps) == 1:
        # single inverse step: fill for the opposite direction and invert
        back = _fill_zigzag(c, f.inverse(), g2, g1, fuel - 1)
        return rotate(S2, back)
    head = ZigZag(f.source, f.steps[:1])
    tail = ZigZag(head.target, f.steps[1:])
    g3 = normalize(c.base, head.target, LEFTMOST, fuel)
    a1 = _fill_zigzag(c, head, g1, g3, fuel - 1)
    a2 = _fill_zigzag(c, tail, g3, g2, fuel - 1)
    return compose(HORIZONTAL, a1, a2)


def fill_shell(c: Completion, s: Shell, fuel: int = DEFAULT_FUEL) -> CellTerm:
    """Fill an arbitrary shell of zig-zags over a convergent completion."""
    bad = s.corner_violations()
    if bad:
        raise PreconditionError("not a shell: " + "; ".join(bad))
    for b in critical_branchings(c.base):
        if (b.first, b.second) not in c.pairs and (b.second, b.first) not in c.pairs:
            raise IncompleteCompletionError(
                "incomplete square set: no generator for the critical "
                f"branching on {format_word(b.source)}")
    corners = (s.top.source, s.top.target, s.left.target, s.bottom.target)
    g1, g2, g3, g4 = (normalize(c.base, w, LEFTMOST, fuel) for w in corners)
    if len({g.target for g in (g1, g2, g3, g4)}) != 1:
        raise PreconditionError(
            "shell corners normalize to distinct words (system not convergent)")
    if not any((s.top.steps, s.bottom.steps, s.left.steps, s.right.steps)):
        cell = id2(s.top.source)
    else:
        b_top = fill_zigzag(c, s.top, g1, g2, fuel)
        b_bottom = fill_zigzag(c, s.bottom, g3, g4, fuel)
        middle = compose(VERTICAL, b_top, rotate(S1, b_bottom))
        c_left = _edge_fold(c, s.left, g1, g3, fuel)
        c_right = rotate(S2, _edge_fold(c, s.right, g2, g4, fuel))
        cell = compose(HORIZONTAL, compose(HORIZONTAL, c_left, middle), c_right)
    if not validate_filler(cell, s):
        raise AssertionError("synthesized filler does not match its shell")
    return cell


def _edge_fold(c: Completion, e: ZigZag, g_src: Path, g_tgt: Path,
               fuel: int) -> CellTerm:
    """A cell with identity top/bottom, left `e` and right g_src . g_tgt^-1."""
    b = fill_zigzag(c, e, g_src, g_tgt, fuel)
    cell = compose(VERTICAL, gamma_plus(g_src), rotate(T, b))
    return compose(VERTICAL, cell, rotate(S1, gamma_plus(g_tgt)))
