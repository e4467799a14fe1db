from random import Random

from compmt.earley import parse
from compmt.grammar import yield_tokens
from compmt.transduce import transduce, linearize


def _translate(bank, tree):
    return tuple(linearize(transduce(tree, bank.rules, bank.dictionary,
                                     bank.morph)))


def test_parse_rejects_garbage(bank):
    g = bank.grammar_for("in_dist")
    assert parse(g, ["panda", "the", "found", "."]) == []
    assert parse(g, ["completely", "unknown", "tokens"]) == []


def test_parse_round_trip_translation(bank):
    """Sampled sentences re-parse, and some parse reproduces the exact
    translation of the original derivation."""
    g = bank.grammar_for("in_dist")
    rng = Random(5)
    for _ in range(60):
        tree = g.sample_with_rng(rng)
        tokens = yield_tokens(tree)
        want = _translate(bank, tree)
        trees = parse(g, tokens)
        assert trees, tokens
        assert any(_translate(bank, t) == want for t in trees), tokens


def test_parse_respects_limit(bank):
    g = bank.grammar_for("in_dist")
    rng = Random(9)
    tree = g.sample_with_rng(rng)
    tokens = yield_tokens(tree)
    assert len(parse(g, tokens, limit=1)) == 1


def test_parse_is_deterministic(bank):
    g = bank.grammar_for("in_dist")
    tokens = "the woman found the panda .".split()
    a = parse(g, tokens)
    b = parse(g, tokens)
    assert a == b and len(a) >= 1
