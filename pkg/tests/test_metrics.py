import json
import math
import random

import pytest
from hypothesis import given, strategies as st

from compmt.metrics import (ROLE_PARTICLES, ScoringError, corpus_bleu,
                            exact_match, extract_role, partial_match,
                            read_hypotheses, score_records)

GOLD = "jyosei ga panda o mituke ta".split()
PANDA_OBJ = {"target_constituent_ref_tokens": ["panda"],
             "expected_role": "direct_object"}


# --------------------------------------------------------------------------
# Partial Match
# --------------------------------------------------------------------------


def test_partial_match_reference_trio():
    """(i) drops the target word, (ii) puts it in the wrong role, (iii)
    changes only untargeted material: incorrect, incorrect, correct."""
    pred_i = "jyosei ga inu o mituke ta".split()
    pred_ii = "panda ga jyosei o mituke ta".split()
    pred_iii = "dansei ga panda o mituke ta".split()
    assert not partial_match(pred_i, PANDA_OBJ)
    assert not partial_match(pred_ii, PANDA_OBJ)
    assert partial_match(pred_iii, PANDA_OBJ)
    assert not exact_match(pred_iii, GOLD)
    assert partial_match(GOLD, PANDA_OBJ)


def test_partial_match_requires_contiguity():
    ann = {"target_constituent_ref_tokens": ["hon", "no", "ue"],
           "expected_role": "subject"}
    assert partial_match("hon no ue ga kawat ta".split(), ann)
    assert not partial_match("hon ga ue no kawat ta".split(), ann)


def test_partial_match_without_expected_role_checks_presence_only():
    ann = {"target_constituent_ref_tokens": ["tewatasi", "ta"],
           "expected_role": None}
    assert partial_match("kodomo ga hako o tewatasi ta".split(), ann)
    assert not partial_match("kodomo ga hako o okut ta".split(), ann)


def test_partial_match_considers_every_occurrence():
    # first occurrence carries the wrong particle, second the right one
    ann = {"target_constituent_ref_tokens": ["panda"],
           "expected_role": "direct_object"}
    hyp = "panda ga panda o mi ta".split()
    assert partial_match(hyp, ann)


def test_partial_match_empty_constituent_rejected():
    with pytest.raises(ScoringError):
        partial_match(GOLD, {"target_constituent_ref_tokens": [],
                             "expected_role": "subject"})


def test_extract_role():
    assert extract_role(GOLD, ["panda"]).role == "direct_object"
    assert extract_role(GOLD, ["jyosei"]).role == "subject"
    assert extract_role(GOLD, ["mituke"]).role == "unknown"
    assert extract_role(GOLD, ["zou"]).role == "unknown"
    # constituent in final position has no following particle
    assert extract_role(["panda"], ["panda"]).role == "unknown"
    with pytest.raises(ScoringError):
        extract_role(GOLD, [])


@given(st.lists(st.sampled_from("w x y z ga o ni".split()), min_size=1,
                max_size=8),
       st.data())
def test_reference_always_partial_matches_itself(ref, data):
    """Exact output implies Partial Match for any constituent annotation
    read off the reference itself."""
    i = data.draw(st.integers(0, len(ref) - 1))
    j = data.draw(st.integers(i + 1, len(ref)))
    follower = ref[j] if j < len(ref) else None
    ann = {"target_constituent_ref_tokens": ref[i:j],
           "expected_role": ROLE_PARTICLES.get(follower)}
    assert partial_match(ref, ann)
    # presence is occurrence-based, so a prefixed hypothesis still matches
    assert partial_match(["pad", "pad"] + ref, ann)


# --------------------------------------------------------------------------
# BLEU
# --------------------------------------------------------------------------


def test_bleu_identity_is_100(small_build):
    recs, _ = small_build
    refs = [list(r.target_tokens) for r in recs["gen"][:200]]
    assert corpus_bleu(refs, refs) == pytest.approx(100.0)


def test_bleu_hand_computed_three_sentence_corpus():
    refs = ["kodomo ga hon o mi ta".split(),
            "kodomo ga hon o yon da".split(),
            "inu ga hasit ta".split()]
    hyps = [list(refs[0]),
            "kodomo ga hon o mi da".split(),
            list(refs[2])]
    # Modified n-gram counts, tallied by hand.  Sentences 1 and 3 are
    # exact; sentence 2 differs from its reference in one token.
    p1 = (6 + 5 + 4) / (6 + 6 + 4)
    p2 = (5 + 3 + 3) / (5 + 5 + 3)
    p3 = (4 + 2 + 2) / (4 + 4 + 2)
    p4 = (3 + 1 + 1) / (3 + 3 + 1)
    want = 100.0 * (p1 * p2 * p3 * p4) ** 0.25  # equal lengths: no penalty
    assert corpus_bleu(hyps, refs) == pytest.approx(want, abs=1e-6)


def test_bleu_brevity_penalty():
    # all n-gram precisions are 1; only the length ratio matters
    got = corpus_bleu(["a b c d".split()], ["a b c d e".split()])
    assert got == pytest.approx(100.0 * math.exp(1.0 - 5 / 4), abs=1e-6)
    # a longer hypothesis is not rewarded above its precision
    got = corpus_bleu(["a b c d e".split()], ["a b c d".split()])
    assert got < 100.0


def test_bleu_smoothing_floor():
    hyp, ref = "a b c d".split(), "a x c y".split()
    p1 = 2 / 4
    p2 = 0.5 / 3    # floor 1/2 over 3 bigram slots
    p3 = 0.25 / 2   # floor 1/4
    p4 = 0.125 / 1  # floor 1/8
    want = 100.0 * (p1 * p2 * p3 * p4) ** 0.25
    assert corpus_bleu([hyp], [ref]) == pytest.approx(want, abs=1e-9)
    assert corpus_bleu([hyp], [ref], smooth=False) == 0.0


def test_bleu_is_order_insensitive():
    refs = ["kodomo ga hon o mi ta".split(),
            "inu ga hasit ta".split(),
            "neko ga sakana o tabe ta".split()]
    hyps = ["kodomo ga hon o mi da".split(),
            "inu ga ne ta".split(),
            "neko ga sakana o tabe ta".split()]
    a = corpus_bleu(hyps, refs)
    order = [2, 0, 1]
    b = corpus_bleu([hyps[i] for i in order], [refs[i] for i in order])
    assert a == pytest.approx(b)


def test_bleu_degenerate_inputs():
    with pytest.raises(ScoringError):
        corpus_bleu([], [])
    with pytest.raises(ScoringError):
        corpus_bleu([["a"]], [["a"], ["b"]])
    assert corpus_bleu([[]], [["a", "b"]]) == 0.0


@given(st.lists(st.lists(st.sampled_from("p q r s".split()), min_size=4,
                         max_size=8), min_size=1, max_size=5))
def test_bleu_bounded_and_maximal_on_identity(refs):
    # sentences of four or more tokens, so every n-gram order is populated
    assert corpus_bleu(refs, refs) == pytest.approx(100.0)
    rng = random.Random(0)
    hyps = [[rng.choice("p q r s".split()) for _ in ref] for ref in refs]
    score = corpus_bleu(hyps, refs)
    assert 0.0 <= score <= 100.0


# --------------------------------------------------------------------------
# Reports and file plumbing
# --------------------------------------------------------------------------


def test_self_scoring_is_perfect(small_build, patterns):
    recs, _ = small_build
    gen = recs["gen"]
    hyp_by_id = {r.id: list(r.target_tokens) for r in gen}
    report = score_records(hyp_by_id, gen, patterns)
    assert report.scored == len(gen) and report.skipped == 0
    assert report.overall["exact_pct"] == pytest.approx(100.0)
    assert report.overall["bleu"] == pytest.approx(100.0)
    assert report.overall["partial_pct"] == pytest.approx(100.0)
    for group, agg in report.per_group.items():
        assert agg["exact_pct"] == pytest.approx(100.0), group
    for row in report.per_pattern:
        assert row.exact_pct == pytest.approx(100.0), row.pattern_id
        if row.pattern_id.endswith(("shallower", "deeper")):
            assert row.partial_pct is None, row.pattern_id
        else:
            assert row.partial_pct == pytest.approx(100.0), row.pattern_id


def test_report_table_marks_unevaluable_partial(small_build, patterns):
    recs, _ = small_build
    gen = recs["gen"]
    report = score_records({r.id: list(r.target_tokens) for r in gen},
                           gen, patterns)
    table = report.table()
    assert "---" in table and "[overall]" in table
    json.loads(report.to_json())


def test_missing_hypotheses_are_skipped(small_build, patterns):
    recs, _ = small_build
    gen = recs["gen"]
    hyp_by_id = {r.id: list(r.target_tokens) for r in gen[:10]}
    report = score_records(hyp_by_id, gen, patterns)
    assert report.scored == 10
    assert report.skipped == len(gen) - 10


def test_read_hypotheses_jsonl(tmp_path):
    path = tmp_path / "h.jsonl"
    path.write_text('{"id": "a", "hypothesis": "x y"}\n'
                    '{"id": "b", "hypothesis": ["z"]}\n', encoding="utf-8")
    assert read_hypotheses(str(path)) == {"a": ["x", "y"], "b": ["z"]}


def test_read_hypotheses_plain_text_alignment(tmp_path, small_build):
    recs, _ = small_build
    gen = recs["gen"][:5]
    path = tmp_path / "h.txt"
    path.write_text("\n".join(r.target for r in gen) + "\n",
                    encoding="utf-8")
    got = read_hypotheses(str(path), gen)
    assert got == {r.id: list(r.target_tokens) for r in gen}
    with pytest.raises(ScoringError):
        read_hypotheses(str(path), gen[:4])
    with pytest.raises(ScoringError):
        read_hypotheses(str(path))  # no records to align against


def test_read_hypotheses_bad_jsonl(tmp_path):
    path = tmp_path / "h.jsonl"
    path.write_text('{"id": "a"}\n', encoding="utf-8")
    with pytest.raises(ScoringError):
        read_hypotheses(str(path))
