import random

import pytest
from hypothesis import given, settings, strategies as st

from airframe.diagram import (GraphPairDiagram, commutator, evaluate_word,
                              identity, reversal_matching)
from airframe.systems import airplane, airplane_generators


NAMES = list("abgde")


def random_word(rng, max_len):
    return [(rng.choice(NAMES), rng.choice([1, -1]))
            for _ in range(rng.randrange(1, max_len + 1))]


words = st.lists(
    st.tuples(st.sampled_from(NAMES), st.sampled_from([1, -1])),
    min_size=0, max_size=6)


def test_reversal_matchings(A):
    red = reversal_matching(A.rule_for("red"))
    assert red == {0: (1, True), 1: (0, True), 2: (2, False)}
    blue = reversal_matching(A.rule_for("blue"))
    # the half turn: the two arcs of the midpoint circle swap straight
    assert blue == {0: (3, False), 1: (2, False), 2: (1, False),
                    3: (0, False)}


def test_generators_validate(gens):
    for f in gens.values():
        assert f.validate()


def test_validate_rejects_red_swap_with_straight_flags(A):
    f = GraphPairDiagram.from_strings(A, [
        ("rT", "rB"), ("rB", "rT"), ("bL", "bL"), ("bR", "bR")])
    assert not f.validate()


def test_expand_then_reduce_is_identity_map(gens):
    f = gens["b"]
    g = f.expand_pair(("rT", ())).expand_pair(("bR", ()))
    assert g.validate()
    assert g.reduce().equals(f)


@settings(max_examples=40, deadline=None)
@given(words, st.integers(0, 2 ** 30))
def test_reduction_canonical_under_schedules(word, seed):
    gens = _table()
    f = evaluate_word(gens, word)
    rng = random.Random(seed)
    g = f
    for _ in range(3):
        a = rng.choice(sorted(g.mapping))
        g = g.expand_pair(a)
    r1 = g.reduce()
    r2 = g.reduce(rng=random.Random(seed + 1))
    assert r1.equals(f) and r2.equals(f)
    assert r1.mapping == r2.mapping


_TABLE = None


def _table():
    global _TABLE
    if _TABLE is None:
        _TABLE = airplane_generators()
    return _TABLE


@settings(max_examples=25, deadline=None)
@given(words, words)
def test_composition_word_concatenation(w1, w2):
    gens = _table()
    lhs = evaluate_word(gens, w1).compose(evaluate_word(gens, w2))
    rhs = evaluate_word(gens, w1 + w2)
    assert lhs.equals(rhs)


@settings(max_examples=25, deadline=None)
@given(words)
def test_inverse_cancels(w):
    gens = _table()
    f = evaluate_word(gens, w)
    assert f.compose(f.invert()).is_identity()
    assert f.invert().compose(f).is_identity()


def test_json_roundtrip(gens, A):
    for f in gens.values():
        back = GraphPairDiagram.from_json(A, f.to_json())
        assert back.equals(f)


def test_power_and_order(gens):
    db = gens["d"].compose(gens["b"])
    assert db.order_up_to(5) == 3
    assert gens["d"].order_up_to(3) == 2
    assert gens["e"].order_up_to(6) is None


def test_commutator_of_commuting_elements(gens):
    assert commutator(gens["b"], gens["b"]).is_identity()


def test_identity_props(A, gens):
    e = identity(A)
    assert e.is_identity()
    assert e.compose(gens["a"]).equals(gens["a"])
