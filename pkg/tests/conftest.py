"""Shared fixtures: the reference presentations and random generators."""

import random

import pytest

from cubicalrw import (Rule, RewriteStep, Shell, SignedStep, Word,
                       applicable_steps, find_occurrences, make_polygraph,
                       parse_word, squier_completion, zigzag)

W = parse_word


@pytest.fixture(scope="session")
def k1():
    """One generator, aa -> a."""
    return make_polygraph(["a"], [Rule("r", W("a a"), W("a"))])


@pytest.fixture(scope="session")
def k2():
    """Two generators, ba -> ab."""
    return make_polygraph(["a", "b"], [Rule("s", W("b a"), W("a b"))])


@pytest.fixture(scope="session")
def xx():
    """One generator, xx -> empty."""
    return make_polygraph(["x"], [Rule("q", W("x x"), W("1"))])


@pytest.fixture(scope="session")
def k1_completion(k1):
    return squier_completion(k1, ["a"])


@pytest.fixture(scope="session")
def k2_completion(k2):
    return squier_completion(k2, ["b", "a"])


@pytest.fixture(scope="session")
def xx_completion(xx):
    return squier_completion(xx, ["x"])


def words_upto(alphabet, max_len):
    """Every word over the alphabet up to the given length."""
    out = [Word()]
    frontier = [Word()]
    for _ in range(max_len):
        frontier = [w + Word((g,)) for w in frontier for g in alphabet]
        out.extend(frontier)
    return out


def backward_steps(p, w):
    """All signed steps rewriting *to* w (rule applications read backwards)."""
    out = []
    for rule in p.rules:
        m = len(rule.rhs)
        if m == 0:
            positions = range(len(w) + 1)
        elif len(w) >= m:
            positions = find_occurrences(rule.rhs, w)
        else:
            positions = []
        for i in positions:
            out.append(SignedStep(RewriteStep(w[:i], rule, w[i + m:]), False))
    return out


def random_zigzag(rng, p, start, max_len):
    w, steps = start, []
    for _ in range(rng.randint(0, max_len)):
        candidates = [SignedStep(st) for st in applicable_steps(p, w)] \
            + backward_steps(p, w)
        if not candidates:
            break
        s = rng.choice(candidates)
        steps.append(s)
        w = s.target
    return zigzag(start, steps)


def random_shell(rng, p, alphabet, max_word=5, max_edge=2):
    """A valid shell with random zig-zag edges; the bottom edge closes the
    other three, so its length is at most 3 * max_edge."""
    a = Word(tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_word))))
    top = random_zigzag(rng, p, a, max_edge)
    left = random_zigzag(rng, p, a, max_edge)
    right = random_zigzag(rng, p, top.target, max_edge)
    bottom = left.inverse().compose(top).compose(right)
    return Shell(top=top, bottom=bottom, left=left, right=right)


def seeded(seed=20240811):
    return random.Random(seed)


def random_cells(rng, p, alphabet, squares, count, max_word=4, max_edge=3):
    """A pool of `count` randomly built well-formed cell terms."""
    from cubicalrw import (FaceMismatchError, HORIZONTAL, PRODUCT, S1, S2, T,
                          VERTICAL, compose, degenerate, gen, id2, rotate)
    from cubicalrw.cube import EPS1, EPS2, GAMMA_MINUS, GAMMA_PLUS

    def random_word():
        return Word(tuple(rng.choice(alphabet)
                          for _ in range(rng.randint(0, max_word))))

    def random_edge():
        return random_zigzag(rng, p, random_word(), max_edge)

    pool = []
    while len(pool) < count:
        roll = rng.random()
        try:
            if roll < 0.3 or not pool:
                kind = rng.choice([EPS1, EPS2, GAMMA_MINUS, GAMMA_PLUS])
                cell = degenerate(kind, random_edge())
            elif roll < 0.35:
                cell = id2(random_word())
            elif roll < 0.45 and squares:
                sq = rng.choice(squares)
                cell = gen(sq.name, sq.shell)
            elif roll < 0.6:
                cell = rotate(rng.choice([T, S1, S2]), rng.choice(pool))
            elif roll < 0.75:
                cell = compose(PRODUCT, rng.choice(pool), rng.choice(pool))
            else:
                direction = rng.choice([VERTICAL, HORIZONTAL])
                a = rng.choice(pool)
                if direction == VERTICAL:
                    matches = [b for b in pool if a.shell.bottom == b.shell.top]
                else:
                    matches = [b for b in pool if a.shell.right == b.shell.left]
                if not matches:
                    continue
                cell = compose(direction, a, rng.choice(matches))
        except FaceMismatchError:
            continue
        pool.append(cell)
    return pool


def inverse_axiom_sides(cell):
    """Both composites of the T-inversion axiom, built from a cell's faces.

    The left side pastes the cell against its transpose using connections;
    the right side is a composite of connections alone.  The two sides are
    required to have equal shells."""
    from cubicalrw import (HORIZONTAL, T, VERTICAL, compose, faces,
                          gamma_minus, gamma_plus, rotate)
    s = faces(cell)
    row1 = compose(HORIZONTAL, gamma_plus(s.top), rotate(T, cell))
    row2 = compose(HORIZONTAL, cell, gamma_minus(s.right))
    lhs = compose(VERTICAL, row1, row2)
    rhs = compose(HORIZONTAL, gamma_minus(s.left), gamma_plus(s.bottom))
    return lhs, rhs
