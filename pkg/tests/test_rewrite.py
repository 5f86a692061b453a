"""Steps, paths, zig-zags, normalization and the termination certificate."""

import random

import pytest

from cubicalrw import (FuelExhaustedError, Path, PreconditionError,
                       RewriteStep, Rule, SignedStep, Word, ZigZag,
                       applicable_steps, identity_path, is_normal_form,
                       make_polygraph, normalize, parse_word, path_product,
                       verify_termination_order, zigzag)
from cubicalrw.rewrite import (format_path, format_step, format_zigzag,
                               parse_path, parse_step, parse_zigzag,
                               reduce_signed_steps)
from conftest import backward_steps, random_zigzag, seeded, words_upto

W = parse_word


def step(p, u, rule_name, v):
    rule = p.rules_by_name()[rule_name]
    return RewriteStep(W(u), rule, W(v))


def test_step_endpoints(k1):
    st = step(k1, "1", "r", "a")
    assert st.source == W("a a a")
    assert st.target == W("a a")


def test_apply_step_examples(k1, k2):
    assert step(k1, "1", "r", "a").target == W("a a")
    assert step(k2, "b a", "s", "1").target == W("b a a b")
    assert step(k2, "1", "s", "1").target == W("a b")


def test_applicable_steps_examples(k1, k2):
    assert applicable_steps(k1, W("a a a")) == [
        step(k1, "1", "r", "a"), step(k1, "a", "r", "1")]
    assert applicable_steps(k2, W("a a b b")) == []
    assert applicable_steps(k1, W("a")) == []


def test_path_chaining_enforced(k1):
    st = step(k1, "1", "r", "a")
    with pytest.raises(PreconditionError):
        Path(W("a a"), (st,))
    p = Path(st.source, (st,))
    assert p.target == W("a a")


def test_normalize_examples(k1, k2):
    p = normalize(k1, W("a a a"))
    assert len(p.steps) == 2 and p.target == W("a")
    q = normalize(k2, W("b b a a"))
    assert len(q.steps) == 4 and q.target == W("a a b b")
    assert normalize(k1, W("a")) == identity_path(W("a"))


def test_normalize_strategies_agree_on_normal_form(k1, k2):
    for p, alphabet in ((k1, "a"), (k2, "ab")):
        for w in words_upto(alphabet, 7):
            left = normalize(p, w, "leftmost")
            right = normalize(p, w, "rightmost")
            assert left.target == right.target
            assert is_normal_form(p, left.target)


def exhaustive_normal_forms(p, w, cache=None):
    """All words reachable by maximal rewriting (every strategy)."""
    if cache is None:
        cache = {}
    if w in cache:
        return cache[w]
    steps = applicable_steps(p, w)
    if not steps:
        cache[w] = {w}
    else:
        cache[w] = set()
        for st in steps:
            cache[w] |= exhaustive_normal_forms(p, st.target, cache)
    return cache[w]


def test_normalize_agrees_with_exhaustive_rewriting(k1, k2):
    for p, alphabet in ((k1, "a"), (k2, "ab")):
        cache = {}
        for w in words_upto(alphabet, 7):
            nfs = exhaustive_normal_forms(p, w, cache)
            assert nfs == {normalize(p, w).target}


def test_normalize_fuel_exhaustion():
    loop = make_polygraph(["a"], [Rule("r", W("a"), W("a"))])
    with pytest.raises(FuelExhaustedError):
        normalize(loop, W("a"), fuel=50)


def test_path_product_examples(k1, k2):
    r = k1.rules_by_name()["r"]
    f = Path(W("a a"), (RewriteStep(W("1"), r, W("1")),))
    b = identity_path(W("b"))
    prod = path_product(f, b)
    assert prod.source == W("a a b")
    assert prod.steps == (RewriteStep(W("1"), r, W("b")),)

    assert path_product(identity_path(W("a")), identity_path(W("b"))) \
        == identity_path(W("a b"))

    two = make_polygraph(["a", "b"], [Rule("r", W("a a"), W("a")),
                                      Rule("r2", W("b b"), W("b"))])
    r2 = two.rules_by_name()["r2"]
    g = Path(W("b b"), (RewriteStep(W("1"), r2, W("1")),))
    fg = path_product(f, g)
    assert [st.target for st in fg.steps] == [W("a b b"), W("a b")]


def test_path_product_whiskering_endpoints(k2):
    f = Path(W("b a"), (step(k2, "1", "s", "1"),))
    u, v = W("b"), W("a")
    w = f.whisker(u, v)
    assert w.source == u + f.source + v
    assert w.target == u + f.target + v


def test_zigzag_inverse_and_compose(k1):
    st = step(k1, "1", "r", "a")
    plus = ZigZag(st.source, (SignedStep(st),))
    minus = plus.inverse()
    assert minus.steps[0].positive is False
    assert minus.source == st.target and minus.target == st.source
    assert plus.compose(minus) == ZigZag(st.source)


def test_zigzag_reduce_single_cancellation(k1):
    s1 = step(k1, "1", "r", "a")
    s2 = step(k1, "1", "r", "1")
    z = zigzag(s1.source, [SignedStep(s1), SignedStep(s1, False),
                           SignedStep(s1), SignedStep(s2)])
    assert z.steps == (SignedStep(s1), SignedStep(s2))


def test_zigzag_rejects_unreduced():
    p = make_polygraph(["a"], [Rule("r", W("a a"), W("a"))])
    st = step(p, "1", "r", "1")
    with pytest.raises(PreconditionError):
        ZigZag(st.source, (SignedStep(st), SignedStep(st, False)))


def random_order_reduce(rng, steps):
    """Cancel adjacent inverse pairs in random order until none remain."""
    steps = list(steps)
    while True:
        spots = [i for i in range(len(steps) - 1)
                 if steps[i].step == steps[i + 1].step
                 and steps[i].positive != steps[i + 1].positive]
        if not spots:
            return tuple(steps)
        i = rng.choice(spots)
        del steps[i:i + 2]


def test_zigzag_reduce_confluent(k1, xx):
    rng = seeded(7)
    for p, alphabet in ((k1, "a"), (xx, "x")):
        for _ in range(100):
            start = Word(tuple(rng.choice(alphabet)
                               for _ in range(rng.randint(1, 4))))
            walk = []
            w = start
            for _ in range(rng.randint(0, 10)):
                cands = [SignedStep(s) for s in applicable_steps(p, w)] \
                    + backward_steps(p, w)
                if not cands:
                    break
                s = rng.choice(cands)
                walk.append(s)
                w = s.target
            assert reduce_signed_steps(walk) == random_order_reduce(rng, walk)


def test_verify_termination_order(k1, k2):
    assert verify_termination_order(k1, ["a"])
    assert verify_termination_order(k2, ["b", "a"])
    reversed_k2 = make_polygraph(["a", "b"], [Rule("s", W("a b"), W("b a"))])
    assert not verify_termination_order(reversed_k2, ["b", "a"])


def test_verify_termination_order_requires_full_precedence(k2):
    with pytest.raises(PreconditionError):
        verify_termination_order(k2, ["b"])


def test_step_and_path_serialization(k1, k2):
    st = step(k1, "1", "r", "a")
    assert format_step(st) == "1 | r | a"
    assert parse_step("1 | r | a", k1.rules_by_name()) == st

    p = normalize(k2, W("b b a a"))
    text = format_path(p)
    assert parse_path(text, k2.rules_by_name()) == p

    z = zigzag(st.source, [SignedStep(st)]).compose(
        zigzag(st.target, [SignedStep(step(k1, "a", "r", "1"), False)]))
    text = format_zigzag(z)
    assert parse_zigzag(text, k1.rules_by_name()) == z


def test_signed_step_serialization_round_trip(k1):
    rng = seeded(11)
    for _ in range(50):
        z = random_zigzag(rng, k1, W("a a a"), 5)
        assert parse_zigzag(format_zigzag(z), k1.rules_by_name()) == z
