import pytest

from compmt.earley import parse
from compmt.transduce import (TransductionError, linearize, transduce,
                              translate)

# English sentence -> expected morpheme-level gloss.  Each pair exercises a
# different construction: plain transitive, long passive, PP-on-subject
# genitive chain, passive wh-question, and a depth-3 locative chain in a
# prepositional dative.
GOLDENS = [
    ("in_dist",
     "The woman found the panda .",
     "jyosei ga panda o mituke ta"),
    ("active_to_passive",
     "Sophia was recognized by Liam .",
     "sofia ga riamu niyotte ninsikisa re ta"),
    ("pp_in_subj",
     "The jar on the book changed .",
     "hon no ue no bin ga kawat ta"),
    ("wh_passive_subj",
     "What was seen ?",
     "nani ga mi rare ta ka ?"),
    ("in_dist",
     "The child handed the box beside the table beside the tree beside "
     "the house to the teacher .",
     "kodomo ga ie no yoko no ki no yoko no teeburu no yoko no hako o "
     "kyoosi ni tewatasi ta"),
]


@pytest.mark.parametrize("grammar_id,source,gloss", GOLDENS)
def test_paper_glosses_token_exact(bank, grammar_id, source, gloss):
    grammar = bank.grammar_for(grammar_id)
    tokens = source.split()
    trees = parse(grammar, tokens)
    if not trees:
        trees = parse(grammar,
                      [tokens[0][0].lower() + tokens[0][1:]] + tokens[1:])
    assert trees, source
    want = gloss.split()
    produced = [list(linearize(transduce(t, bank.rules, bank.dictionary,
                                         bank.morph)))
                for t in trees]
    assert want in produced, produced


def test_translate_returns_aligned_pair(bank):
    g = bank.grammar_for("in_dist")
    tree = g.sample(21)
    pair = translate(tree, bank.rules, bank.dictionary, bank.morph)
    assert pair.source_tokens and pair.target_tokens
    assert pair.alignment  # every pair carries span alignment data


def test_declaratives_are_sov_without_final_punct(bank):
    """Japanese declaratives end in verbal morphology, never punctuation;
    questions end with the particle sequence 'ka ?'."""
    g = bank.grammar_for("in_dist")
    from random import Random
    rng = Random(3)
    seen_q = seen_d = 0
    for _ in range(300):
        tree = g.sample_with_rng(rng)
        pair = translate(tree, bank.rules, bank.dictionary, bank.morph)
        if pair.source_tokens[-1] == "?":
            seen_q += 1
            assert pair.target_tokens[-2:] == ("ka", "?")
        else:
            seen_d += 1
            assert pair.target_tokens[-1] not in (".", "?")
    assert seen_d > 0


def test_transduce_unknown_production_raises(bank):
    from compmt.grammar import Production, ProdNode, Lit, LitNode
    orphan = ProdNode(Production("no_such_rule", "S", (Lit("x"),)),
                      (LitNode("x"),))
    with pytest.raises(TransductionError):
        transduce(orphan, bank.rules, bank.dictionary, bank.morph)
