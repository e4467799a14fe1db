"""The leakage audit: clean on a real build, and sharp enough to catch a
single injected generalization sentence per pattern."""

import pytest

from compmt.audit import GapAuditor, audit_gap, segment
from compmt.build import SentenceRecord


def _as_train(record):
    return SentenceRecord("inj-" + record.id, "train", "",
                          record.source_tokens, record.target_tokens)


@pytest.fixture(scope="module")
def auditor(bank, patterns, mid_build):
    """One auditor that has consumed the whole mid-scale training split."""
    recs, _ = mid_build
    a = GapAuditor(patterns, bank=bank)
    for r in recs["train"]:
        a.consume(r)
    return a


def test_clean_build_has_no_violations(auditor):
    assert auditor.violations == []
    assert auditor.prerequisite_violations() == []


@pytest.fixture(scope="module")
def first_gen(mid_build):
    out = {}
    for r in mid_build[0]["gen"]:
        out.setdefault(r.pattern_id, r)
    return out


def pytest_generate_tests(metafunc):
    if "pattern_id" in metafunc.fixturenames:
        # Listed literally: parametrization happens at collection time,
        # before the session-scoped bank exists.
        ids = [
            "subj_to_obj_common", "subj_to_obj_proper", "obj_to_subj_common",
            "obj_to_subj_proper", "prim_to_subj_common",
            "prim_to_subj_proper", "prim_to_obj_common", "prim_to_obj_proper",
            "prim_to_inf_verb", "tense_dit", "tense_inf", "tense_cp",
            "trans_to_dit", "trans_to_inf", "trans_to_cp",
            "active_to_passive", "passive_to_active", "objom_to_trans",
            "unacc_to_trans", "do_to_pp", "pp_to_do", "pp_in_subj",
            "pp_in_iobj", "rc_in_subj", "rc_in_iobj", "adj_in_subj",
            "adj_in_iobj", "cp_recursion_shallower", "cp_recursion_deeper",
            "pp_recursion_shallower", "pp_recursion_deeper",
            "ce_recursion_shallower", "ce_recursion_deeper",
            "adj_recursion_shallower", "adj_recursion_deeper",
            "rc_iobj_gap", "wh_iobj_gap", "wh_active_subj",
            "wh_passive_subj", "wh_do_dit", "wh_subj_pp", "wh_long_move",
        ]
        metafunc.parametrize("pattern_id", ids)


def test_injected_gen_sentence_is_caught(auditor, first_gen, pattern_id):
    """Moving any pattern's generalization sentence into training must
    produce at least one leak attributed to that pattern."""
    start = len(auditor.violations)
    auditor.consume(_as_train(first_gen[pattern_id]))
    new = auditor.violations[start:]
    del auditor.violations[start:]
    assert any(v.pattern_id == pattern_id and v.kind == "leak"
               for v in new), [str(v) for v in new]


def test_injected_pp_subject_sentence(bank, patterns):
    a = GapAuditor(patterns, bank=bank)
    a.consume(SentenceRecord(
        "inj-pp", "train", "",
        tuple("The baby in the room cried .".split()), ()))
    assert [(v.pattern_id, v.kind) for v in a.violations] == \
        [("pp_in_subj", "leak")]


def test_injected_cp_depth_three_sentence(bank, patterns):
    a = GapAuditor(patterns, bank=bank)
    a.consume(SentenceRecord(
        "inj-cp3", "train", "",
        tuple(("Emma believed that Liam hoped that Noah realized that "
               "the woman smiled .").split()), ()))
    assert [(v.pattern_id, v.kind) for v in a.violations] == \
        [("cp_recursion_shallower", "leak")]


def test_unparsable_training_sentence_is_flagged(bank, patterns):
    a = GapAuditor(patterns, bank=bank)
    a.consume(SentenceRecord(
        "inj-bad", "train", "",
        tuple("colorless green ideas sleep .".split()), ()))
    assert [v.kind for v in a.violations] == ["unparsable"]


def test_empty_training_set_misses_prerequisites(bank, patterns):
    violations = audit_gap([], patterns, bank=bank)
    assert violations
    assert {v.kind for v in violations} == {"missing_prerequisite"}
    assert {v.pattern_id for v in violations} == {p.id for p in patterns}


def test_segment_splits_on_sentence_punctuation():
    toks = ("The", "fox", "ran", ".", "Who", "slept", "?")
    assert segment(toks) == [["The", "fox", "ran", "."],
                             ["Who", "slept", "?"]]
    assert segment(("lone",)) == [["lone"]]


def test_most_innocent_parse_rule(bank, patterns):
    """A sentence ambiguous between an innocent and a withheld reading is
    not charged: 'Harper wrote .' parses as object omission (licensed) and
    as plain intransitive."""
    a = GapAuditor(patterns, bank=bank)
    a.consume(SentenceRecord(
        "amb", "train", "", tuple("Harper wrote .".split()), ()))
    assert a.violations == []
