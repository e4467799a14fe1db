from fractions import Fraction

import pytest

from compmt.grammar import (Constraints, GrammarError, LexEntry, Lexicon,
                            Lit, NT, Pcfg, Production, Slot, depth_of,
                            iter_productions, yield_tokens)


def _toy_lexicon():
    nouns = ["cat", "dog", "owl", "fox"]
    return Lexicon([
        LexEntry(w, "N", forms={"base": w}, zipf_rank=i + 1)
        for i, w in enumerate(nouns)
    ])


def _toy_grammar():
    n = Slot("N", "base", "n:head")
    return Pcfg("S", [
        Production("s", "S", (NT("A"), n)),
        Production("a_one", "A", (Lit("one"),), Fraction(1, 4)),
        Production("a_two", "A", (Lit("two"),), Fraction(3, 4)),
    ], _toy_lexicon())


def test_validate_clean_grammar():
    assert _toy_grammar().validate() == []


def test_validate_flags_non_normalized_lhs():
    g = Pcfg("S", [
        Production("s", "S", (Lit("x"),), Fraction(1, 2)),
        Production("s2", "S", (Lit("y"),), Fraction(1, 3)),
    ], _toy_lexicon())
    kinds = {v.kind for v in g.validate()}
    assert "non_normalized" in kinds


def test_validate_flags_dangling_nonterminal():
    g = Pcfg("S", [Production("s", "S", (NT("MISSING"),))], _toy_lexicon())
    assert any(v.kind != "non_normalized" for v in g.validate())


def test_empty_rhs_rejected():
    with pytest.raises(GrammarError):
        Production("bad", "S", ())


def test_negative_weight_rejected():
    with pytest.raises(GrammarError):
        Production("bad", "S", (Lit("x"),), Fraction(-1))


def test_slot_admission_respects_lemmas_and_bundle():
    lex = _toy_lexicon()
    open_slot = Slot("N", "base", "n:x")
    narrow = Slot("N", "base", "n:x", lemmas=frozenset({"cat"}))
    wrong_bundle = Slot("N", "past", "n:x")
    cat = lex.by_key[("cat", "N")]
    dog = lex.by_key[("dog", "N")]
    assert open_slot.admits(cat) and open_slot.admits(dog)
    assert narrow.admits(cat) and not narrow.admits(dog)
    assert not wrong_bundle.admits(cat)


def test_restrict_slots_swaps_lemma_sets():
    g = _toy_grammar()
    g2 = g.restrict_slots({"n:head": {"owl"}})
    tree = g2.sample(7)
    leaves = [t for t in yield_tokens(tree) if t not in ("one", "two")]
    assert leaves == ["owl"]
    # the original grammar is untouched
    lemmas = {yield_tokens(g.sample(seed))[-1] for seed in range(40)}
    assert len(lemmas) > 1


def test_sampling_is_deterministic_in_seed():
    g = _toy_grammar()
    a = [yield_tokens(g.sample(s)) for s in range(20)]
    b = [yield_tokens(g.sample(s)) for s in range(20)]
    assert a == b


def test_constraints_required_and_forbidden():
    g = _toy_grammar()
    tree = g.sample(3, Constraints(required=frozenset({"a_one"})))
    assert "a_one" in {p.id for p in iter_productions(tree)}
    tree = g.sample(3, Constraints(forbidden=frozenset({"a_one"})))
    assert "a_one" not in {p.id for p in iter_productions(tree)}


def test_constraints_unsatisfiable_raises():
    from compmt.grammar import UnsatisfiableConstraintError
    g = _toy_grammar()
    with pytest.raises(UnsatisfiableConstraintError):
        g.sample(3, Constraints(required=frozenset({"a_one", "a_two"}),
                                budget=50))


def test_depth_of_counts_nested_constructs():
    lex = _toy_lexicon()
    g = Pcfg("S", [
        Production("wrap", "S", (Lit("("), NT("S"), Lit(")")),
                   Fraction(1, 3), construct="CP"),
        Production("stop", "S", (Lit("x"),), Fraction(2, 3)),
    ], lex)
    tree = g.sample(1, Constraints(depths=(("CP", 3),)))
    assert depth_of(tree, "CP") == 3
    assert yield_tokens(tree) == ["(", "(", "(", "x", ")", ")", ")"]


def test_derivation_probability_matches_rule_weights():
    g = _toy_grammar()
    tree = g.sample(5)
    p = g.derivation_probability(tree)
    assert 0.0 < p < 1.0


def test_default_bank_grammars_validate(bank, patterns):
    assert bank.grammar_for("in_dist").validate() == []
    for p in patterns:
        assert p.gen_grammar.validate() == [], p.id
    for construct in ("CP", "PP", "CenterEmbedRC", "Adj"):
        assert bank.grammar_for(f"boost:{construct}").validate() == []
