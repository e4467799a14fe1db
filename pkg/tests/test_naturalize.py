from random import Random

import pytest

from compmt.earley import parse
from compmt.grammar import GrammarError
from compmt.naturalize import (CaseFrameList, UnrepairableRecordError,
                               check_selectional, default_case_frames,
                               naturalize, parse_case_frames,
                               reject_duplicates, serialize_case_frames)
from compmt.transduce import linearize, transduce


def _gloss(bank, tree):
    return " ".join(linearize(transduce(tree, bank.rules, bank.dictionary,
                                        bank.morph)))


def _parse_one(bank, sentence):
    trees = parse(bank.grammar_for("in_dist"), sentence.split())
    assert len(trees) == 1, sentence
    return trees[0]


def test_duplicate_lexeme_rejection(bank):
    dup = _parse_one(bank, "the teacher found the teacher .")
    ok = _parse_one(bank, "the teacher found the panda .")
    assert reject_duplicates(dup)
    assert not reject_duplicates(ok)


def test_unlicensed_object_repaired_to_top_ranked_noun(bank):
    """'the teacher ate the bed' is implausible; repair swaps in the
    highest-ranked licensed object of 'eat' and retranslation reflects it."""
    tree = _parse_one(bank, "the teacher ate the bed .")
    cf = default_case_frames()
    viols = check_selectional(tree, cf)
    assert [(v.verb, v.role, v.noun) for v in viols] == \
        [("eat", "direct_object", "bed")]
    fixed, residual, changed = naturalize(
        tree, cf, Random(0), bank.grammar_for("in_dist").lexicon)
    assert changed and residual == []
    assert _gloss(bank, fixed) == "kyoosi ga ringo o tabe ta"


def test_inanimate_subject_repair(bank):
    tree = _parse_one(bank, "the book bloomed .")
    cf = default_case_frames()
    viols = check_selectional(tree, cf)
    assert [(v.verb, v.role, v.noun) for v in viols] == \
        [("bloom", "inanimate_subject", "book")]
    fixed, residual, changed = naturalize(
        tree, cf, Random(0), bank.grammar_for("in_dist").lexicon)
    assert changed and residual == []
    assert _gloss(bank, fixed) == "hana ga sai ta"


def test_licensed_sentence_unchanged(bank):
    tree = _parse_one(bank, "the flower bloomed .")
    cf = default_case_frames()
    fixed, residual, changed = naturalize(
        tree, cf, Random(0), bank.grammar_for("in_dist").lexicon)
    assert not changed and residual == [] and fixed is tree


def test_repair_is_deterministic_in_seed(bank):
    tree = _parse_one(bank, "the teacher ate the bed .")
    cf = default_case_frames()
    lex = bank.grammar_for("in_dist").lexicon
    a = _gloss(bank, naturalize(tree, cf, Random(7), lex)[0])
    b = _gloss(bank, naturalize(tree, cf, Random(7), lex)[0])
    assert a == b


def test_strict_mode_flags_uncovered_pairs(bank):
    """Open-world by default: a (verb, role) outside the list licenses
    everything.  Strict mode turns every uncovered pair into a violation,
    and with no replacement pool the record is unrepairable."""
    tree = _parse_one(bank, "the teacher found the panda .")
    cf = default_case_frames()
    assert check_selectional(tree, cf) == []
    strict = check_selectional(tree, cf, strict=True)
    assert ("find", "direct_object", "panda") in \
        {(v.verb, v.role, v.noun) for v in strict}
    with pytest.raises(UnrepairableRecordError):
        naturalize(tree, cf, Random(0),
                   bank.grammar_for("in_dist").lexicon, strict=True)


def test_case_frame_tsv_round_trip():
    cf = default_case_frames()
    text = serialize_case_frames(cf)
    cf2 = parse_case_frames(text)
    assert cf2.pairs == cf.pairs
    assert cf2.pool == cf.pool
    assert serialize_case_frames(cf2) == text


def test_parse_case_frames_rejects_malformed_lines():
    with pytest.raises(GrammarError):
        parse_case_frames("eat\tdirect_object\tapple\n")
    with pytest.raises(GrammarError):
        parse_case_frames("eat\tdirect_object\tapple\tfirst\n")
    with pytest.raises(GrammarError):
        CaseFrameList([("eat", "oblique", "apple", 1)])


def test_comments_and_blanks_ignored():
    cf = parse_case_frames(
        "# header\n\neat\tdirect_object\tapple\t1\n")
    assert cf.licensed("eat", "direct_object", "apple", strict=True)
    assert not cf.licensed("eat", "direct_object", "bed")
